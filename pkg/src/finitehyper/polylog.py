"""Truncated multiple zeta values, multiple polylogarithms and their discretizations.

Nested sums over 0 < m_1 < ... < m_r < N are evaluated by the usual
running-sum recursion, which yields the contribution of every value of the top
index m_r at once (:func:`mzv_profile`).  The chain sums over arrays
n_{i,1} <= ... <= n_{i,k_i} < n_{i+1,1} are tabulated block by block from the
right, so a weight-k index costs O(k N) operations instead of one per chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import Pole
from .exact import ResidueClass, as_rational, reduce_mod_p, rising_factorial, rising_factorial_is_zero

__all__ = [
    "ExtendedIndex",
    "Index",
    "ak_congruence_sides",
    "all_indices",
    "arakawa_kaneko_truncated",
    "enumerate_I0",
    "enumerate_I0_tilde",
    "hms_lhs",
    "hms_rhs",
    "msw_rhs",
    "mzv_profile",
    "parse_index",
    "tilde_zeta",
    "truncated_mpl",
    "truncated_mzv",
    "truncated_zeta",
]


@dataclass(frozen=True, order=True)
class Index:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(k) for k in self.parts)
        if not parts or any(k < 1 for k in parts):
            raise ValueError(f"an index is a nonempty tuple of positive integers, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def height(self) -> int:
        return sum(1 for k in self.parts if k > 1)

    @property
    def admissible(self) -> bool:
        return self.parts[-1] >= 2

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True, order=True)
class ExtendedIndex:
    """An index paired with the extra count l, written ``k1,...,kr;l``."""

    index: Index
    l: int

    def __post_init__(self):
        if not isinstance(self.index, Index):
            object.__setattr__(self, "index", Index(tuple(self.index)))
        if self.l < 0:
            raise ValueError("l must be nonnegative")

    @property
    def weight(self) -> int:
        return self.index.weight + self.l

    @property
    def q(self) -> int:
        return self.index.depth + self.l

    @property
    def height(self) -> int:
        return self.index.height

    def __str__(self):
        return f"{self.index};{self.l}"


def _as_index(k) -> Index:
    if isinstance(k, Index):
        return k
    if isinstance(k, str):
        return parse_index(k)
    if isinstance(k, int):
        return Index((k,))
    return Index(tuple(k))


def parse_index(text: str) -> Index | ExtendedIndex:
    """Parse ``"1,2"`` into an Index and ``"1,2;3"`` into an ExtendedIndex."""
    text = text.strip()
    if ";" in text:
        head, l = text.split(";", 1)
        return ExtendedIndex(_parse_parts(head), int(l))
    return _parse_parts(text)


def _parse_parts(text: str) -> Index:
    try:
        return Index(tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()))
    except ValueError as exc:
        raise ValueError(f"cannot parse index {text!r}") from exc


# ---------------------------------------------------------------------------
# nested series


def mzv_profile(k, N: int) -> list[Fraction]:
    """List indexed by m_r in [0, N): contribution of that top index to the truncated MZV."""
    k = _as_index(k)
    return _profile(k.parts, N)


def _profile(k: Sequence[int], N: int, weights=None) -> list[Fraction]:
    """profile[m] = sum over 0 < m_1 < ... < m_r = m of prod_i m_i^{-k_i} weights[i](m_i).

    Weights are evaluated on the whole feasible range of each m_i, so a pole
    is reported even when the partial sum multiplying it happens to vanish.
    """
    r = len(k)
    prev = None
    for i in range(r):
        cur = [Fraction(0)] * N
        # running = sum of prev[m'] over m' < m (or 1 for the innermost sum)
        running = Fraction(1) if i == 0 else Fraction(0)
        for m in range(1, N):
            if i > 0:
                running += prev[m - 1]
            if m < i + 1 or m > N - (r - i):
                continue
            f = running / Fraction(m) ** k[i]
            if weights is not None:
                f *= weights[i](m)
            cur[m] = f
        prev = cur
    return prev


def truncated_mzv(k, N: int) -> Fraction:
    """sum_{0<m_1<...<m_r<N} 1/(m_1^{k_1} ... m_r^{k_r})."""
    return sum(mzv_profile(k, N), Fraction(0))


def truncated_zeta(k: int, N: int) -> Fraction:
    """sum_{n=1}^{N-1} n^{-k}."""
    return sum((Fraction(1, n**k) for n in range(1, N)), Fraction(0))


def _disc_ratio(top: Fraction, bottom: Fraction, m: int, label: str) -> Fraction:
    if rising_factorial_is_zero(bottom, m):
        raise Pole(f"({label})_{m} with {label}={bottom}")
    return rising_factorial(top, m) / rising_factorial(bottom, m)


def truncated_mpl(k, z, N: int) -> Fraction:
    """Truncated MPL: z^{m_r} replaced by (N-m_r)_{m_r} / (N/z - m_r)_{m_r}."""
    k = _as_index(k)
    z = as_rational(z)
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    w = Fraction(N) / z
    total = Fraction(0)
    for m, c in enumerate(mzv_profile(k, N)):
        if m:
            total += c * _disc_ratio(Fraction(N - m), w - m, m, f"N/z-{m}")
    return total


def _hms_x(k: Index, x) -> list[Fraction]:
    x = [as_rational(v) for v in x]
    if len(x) != k.depth:
        raise ValueError(f"need {k.depth} x-values for index {k}, got {len(x)}")
    return x + [Fraction(1)]  # x_{r+1} = 1


def hms_lhs(k, x: Sequence, N: int) -> Fraction:
    """Nested sum with ratios (N x_{i+1} - m_i)_{m_i} / (N x_i - m_i)_{m_i}."""
    k = _as_index(k)
    xs = _hms_x(k, x)

    def weight(i):
        def f(m):
            return _disc_ratio(N * xs[i + 1] - m, N * xs[i] - m, m, f"N*x{i + 1}-{m}")
        return f

    return sum(_profile(k.parts, N, [weight(i) for i in range(k.depth)]), Fraction(0))


def _chain_sum(k: Sequence[int], N: int, first_weight: Callable[[int, int], Fraction]) -> Fraction:
    """Sum over arrays 0 < n_{i,1} <= ... <= n_{i,k_i} < n_{i+1,1}, all < N, of
    prod_i first_weight(i, n_{i,1}) / (n_{i,2} ... n_{i,k_i})."""
    r = len(k)
    if N <= r:
        return Fraction(0)
    # tail[lo] = sum over blocks i+1.. given the previous block ended at lo
    tail = [Fraction(1)] * N
    for i in range(r - 1, -1, -1):
        # u[n] = value of positions j..k_i of block i when position j holds n
        u = [tail[n] for n in range(N)]
        for j in range(k[i] - 1, -1, -1):
            weighted = [Fraction(0)] * N
            for n in range(1, N):
                if j == 0 and i + 1 <= n <= N - (r - i):
                    weighted[n] = u[n] * first_weight(i, n)
                elif j > 0 and u[n]:
                    weighted[n] = u[n] / n
            if j == 0:
                u = weighted
                break
            # next position (j-1) holds n' <= n: suffix sums over n >= n'
            acc = Fraction(0)
            u = [Fraction(0)] * N
            for n in range(N - 1, 0, -1):
                acc += weighted[n]
                u[n] = acc
        # block i starts strictly after lo
        new_tail = [Fraction(0)] * N
        acc = Fraction(0)
        for lo in range(N - 1, -1, -1):
            new_tail[lo] = acc
            acc += u[lo] if lo >= 1 else 0
        tail = new_tail
    return tail[0]


def msw_rhs(k, N: int) -> Fraction:
    """Discretized iterated integral with first factor 1/(N - n_{i,1})."""
    k = _as_index(k)
    return _chain_sum(k.parts, N, lambda i, n: Fraction(1, N - n))


def hms_rhs(k, x: Sequence, N: int) -> Fraction:
    """Discretized iterated integral with first factor 1/(N x_i - n_{i,1})."""
    k = _as_index(k)
    xs = _hms_x(k, x)

    def first(i, n):
        d = N * xs[i] - n
        if d == 0:
            raise Pole(f"N*x{i + 1}-{n} with x{i + 1}={xs[i]}")
        return 1 / d

    return _chain_sum(k.parts, N, first)


# ---------------------------------------------------------------------------
# tilde zeta and Arakawa-Kaneko values


def _complete_homogeneous(xs: Sequence[Fraction], l: int) -> list[Fraction]:
    """h[m] = h_l(xs[1], ..., xs[m]) = sum_{0<n_1<=...<=n_l<=m} prod xs[n_j]."""
    M = len(xs)
    h = [Fraction(1)] * M  # h_0
    for _ in range(l):
        nxt = [Fraction(0)] * M
        for m in range(1, M):
            nxt[m] = nxt[m - 1] + xs[m] * h[m]
        h = nxt
    return h


def tilde_zeta(k, l: int, N: int) -> Fraction:
    """Truncated MZV weighted by h_l(1/(N-1), ..., 1/(N-m_r))."""
    k = _as_index(k)
    if l < 0:
        raise ValueError("l must be nonnegative")
    xs = [Fraction(0)] + [Fraction(1, N - n) for n in range(1, N)]
    h = _complete_homogeneous(xs, l)
    return sum((c * h[m] for m, c in enumerate(mzv_profile(k, N)) if c), Fraction(0))


def arakawa_kaneko_truncated(k, l: int, p: int) -> Fraction:
    """Truncated Arakawa-Kaneko value: last exponent raised by one, weight h_{l-1}(1, 1/2, ..., 1/m_r)."""
    k = _as_index(k)
    if l < 1:
        raise ValueError("l must be positive")
    raised = k.parts[:-1] + (k.parts[-1] + 1,)
    xs = [Fraction(0)] + [Fraction(1, n) for n in range(1, p)]
    h = _complete_homogeneous(xs, l - 1)
    return sum((c * h[m] for m, c in enumerate(_profile(raised, p)) if c), Fraction(0))


def ak_congruence_sides(k, l: int, p: int) -> tuple[ResidueClass, ResidueClass]:
    """Both sides of the mod-p congruence between the truncated Arakawa-Kaneko
    value and (-1)^{l-1} tilde_zeta(k_1, ..., k_r + 1; l-1) at N = p."""
    k = _as_index(k)
    raised = Index(k.parts[:-1] + (k.parts[-1] + 1,))
    left = reduce_mod_p(arakawa_kaneko_truncated(k, l, p), p)
    right = reduce_mod_p((-1) ** (l - 1) * tilde_zeta(raised, l - 1, p), p)
    return left, right


# ---------------------------------------------------------------------------
# index sets


def _compositions(k: int, r: int):
    """All r-tuples of positive integers summing to k."""
    if r == 1:
        if k >= 1:
            yield (k,)
        return
    for first in range(1, k - r + 2):
        for rest in _compositions(k - first, r - 1):
            yield (first,) + rest


def all_indices(weight: int) -> Iterable[Index]:
    """Every index (admissible or not) of the given weight."""
    for r in range(1, weight + 1):
        for parts in _compositions(weight, r):
            yield Index(parts)


def enumerate_I0(k: int, r: int, h: int) -> list[Index]:
    """Admissible indices of weight k, depth r and height h."""
    if r < 1 or h < 1 or k < r + h or r < h:
        return []
    return [Index(c) for c in _compositions(k, r)
            if c[-1] > 1 and sum(1 for x in c if x > 1) == h]


def enumerate_I0_tilde(k: int, q: int, h: int) -> list[ExtendedIndex]:
    """Pairs (index; l) with admissible index, weight + l = k, depth + l = q, height h."""
    out = []
    for l in range(q):
        for idx in enumerate_I0(k - l, q - l, h):
            out.append(ExtendedIndex(idx, l))
    return sorted(out)
