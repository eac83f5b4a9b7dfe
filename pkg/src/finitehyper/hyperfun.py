"""Truncated beta and truncated hypergeometric functions over exact rationals.

Everything is evaluated through ``w = N/z``: the truncated series only ever see
the argument through the ratio (N+1-m)_m / (w-m)_m, so functions that produce
a transformed argument N/(...) hand the denominator straight through as the new
``w``.  Each identity is exposed as separately computed sides; callers compare.

Every Pochhammer symbol that ends up in a denominator is screened first and a
vanishing one raises :class:`~finitehyper.errors.Pole`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import DegenerateArgument, Pole
from .exact import as_rational, binomial, is_nonpositive_integer, rising_factorial, rising_factorial_is_zero

__all__ = [
    "BetaParams",
    "HyperParams",
    "chain_sum_pFp",
    "disc_beta_sum",
    "finite_euler_sides",
    "finite_gauss_sides",
    "finite_pfaff_sides",
    "gen_tHG_int_rhs",
    "multivariate_disc_beta",
    "t1F0_closed_form",
    "tHG_int_rhs",
    "terminating_pFq_at_1",
    "transform_3F2_sides",
    "trunc_2F1_paren",
    "trunc_pFq_bracket",
    "trunc_pFq_paren",
    "truncated_beta",
]


def _screen(a: Fraction, m: int, label: str) -> None:
    if rising_factorial_is_zero(a, m):
        raise Pole(f"({label})_{m} with {label}={a}")


def _poch_ratio(top: Fraction, bottom: Fraction, m: int, label: str) -> Fraction:
    """(top)_m / (bottom)_m with the denominator screened."""
    _screen(bottom, m, label)
    return rising_factorial(top, m) / rising_factorial(bottom, m)


@dataclass(frozen=True)
class HyperParams:
    """Upper/lower parameters, argument z and truncation order N."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction
    N: int
    w: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        z = as_rational(self.z)
        if z == 0:
            raise ValueError("the argument z must be nonzero")
        if self.N < 0:
            raise ValueError("truncation order N must be nonnegative")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", Fraction(self.N) / z)

    @property
    def well_posed(self) -> bool:
        return _bracket_pole(self.lower, self.w, self.N) is None


@dataclass(frozen=True)
class BetaParams:
    a: Fraction
    b: Fraction
    N: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.N < 1:
            raise ValueError("truncated beta needs N >= 1")


# ---------------------------------------------------------------------------
# truncated beta


def truncated_beta(p: BetaParams) -> Fraction:
    """B^[N](a, b) = (a+b)_N (N-1)! / ((a)_N (b)_N)."""
    a, b, N = p.a, p.b, p.N
    _screen(a, N, "a")
    _screen(b, N, "b")
    return rising_factorial(a + b, N) * factorial(N - 1) / (rising_factorial(a, N) * rising_factorial(b, N))


def _disc_weight(a: Fraction, n: int, N: int, label: str) -> Fraction:
    """(1+n)_{N-n} / (a+n)_{N-n}: the discrete stand-in for t^{a-1} at t = n/N."""
    return _poch_ratio(Fraction(1 + n), a + n, N - n, f"{label}+{n}")


def disc_beta_sum(p: BetaParams) -> Fraction:
    """(1/N) sum_n (1+n)_{N-n}/(a+n)_{N-n} * (1+N-n)_n/(b+N-n)_n."""
    a, b, N = p.a, p.b, p.N
    total = Fraction(0)
    for n in range(N + 1):
        total += _disc_weight(a, n, N, "a") * _disc_weight(b, N - n, N, "b")
    return total / N


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def multivariate_disc_beta(a: Sequence, N: int) -> tuple[Fraction, Fraction]:
    """Closed form and discretized sum of the d-variate truncated beta value.

    Returns ``(closed, discrete)``; they agree whenever no Pole is raised.
    """
    a = [as_rational(x) for x in a]
    if len(a) < 2:
        raise ValueError("need at least two parameters")
    if N < 1:
        raise ValueError("N must be positive")
    d = len(a)
    den = Fraction(1)
    for i, ai in enumerate(a):
        _screen(ai, N, f"a{i + 1}")
        den *= rising_factorial(ai, N)
    closed = rising_factorial(sum(a), N) * factorial(N - 1) ** (d - 1) / den
    total = Fraction(0)
    for ns in _compositions(N, d):
        term = Fraction(1)
        for i, (ai, ni) in enumerate(zip(a, ns)):
            term *= _disc_weight(ai, ni, N, f"a{i + 1}")
        total += term
    return closed, total / Fraction(N) ** (d - 1)


# ---------------------------------------------------------------------------
# truncated pFq


def _bracket_pole(lower, w: Fraction, N: int) -> str | None:
    for j, b in enumerate(lower):
        if rising_factorial_is_zero(b, N):
            return f"(b{j + 1})_m for m <= {N} with b{j + 1}={b}"
    # (w-m)_m = (w-m)...(w-1) vanishes iff w is an integer in [1, m]
    if w.denominator == 1 and 1 <= w.numerator <= N:
        return f"(N/z - m)_m with N/z={w}, m={w.numerator}"
    return None


def _bracket_w(upper, lower, w: Fraction, N: int) -> Fraction:
    """sum_{m=0}^{N} prod(a)_m / (prod(b)_m m!) * (N+1-m)_m / (w-m)_m."""
    loc = _bracket_pole(lower, w, N)
    if loc:
        raise Pole(loc)
    total = Fraction(1)
    term = Fraction(1)  # prod(a)_m / (prod(b)_m m!)
    for m in range(1, N + 1):
        j = m - 1
        for a in upper:
            term *= a + j
        if not term:
            break
        for b in lower:
            term /= b + j
        term /= m
        total += term * rising_factorial(N + 1 - m, m) / rising_factorial(w - m, m)
    return total


def trunc_pFq_bracket(p: HyperParams) -> Fraction:
    """The [N]-truncated pFq."""
    return _bracket_w(p.upper, p.lower, p.w, p.N)


def trunc_pFq_paren(upper, lower, z, N: int) -> Fraction:
    """The (N)-truncation: sum_{m=0}^{N-1} ... (N-m)_m / (N/z - m)_m."""
    if N < 1:
        raise ValueError("(N)-truncation needs N >= 1")
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    z = as_rational(z)
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    w = Fraction(N) / z
    loc = _bracket_pole(lower, w, N - 1)
    if loc:
        raise Pole(loc)
    total = Fraction(1)
    term = Fraction(1)
    for m in range(1, N):
        j = m - 1
        for a in upper:
            term *= a + j
        if not term:
            break
        for b in lower:
            term /= b + j
        term /= m
        total += term * rising_factorial(N - m, m) / rising_factorial(w - m, m)
    return total


def trunc_2F1_paren(a, b, c, z, N: int) -> Fraction:
    return trunc_pFq_paren((a, b), (c,), z, N)


def terminating_pFq_at_1(upper: Sequence, lower: Sequence) -> Fraction:
    """sum_{m=0}^{N} prod(upper)_m / (prod(lower)_m m!), N = -(terminating upper parameter).

    The series stops at the first nonpositive-integer upper parameter closest
    to zero.
    """
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    stops = [-a.numerator for a in upper if is_nonpositive_integer(a)]
    if not stops:
        raise ValueError("no upper parameter is a nonpositive integer; the series does not terminate")
    N = min(stops)
    for j, b in enumerate(lower):
        _screen(b, N, f"lower[{j}]")
    total = Fraction(1)
    term = Fraction(1)
    for m in range(1, N + 1):
        j = m - 1
        for a in upper:
            term *= a + j
        for b in lower:
            term /= b + j
        term /= m
        total += term
    return total


def t1F0_closed_form(a, z, N: int) -> Fraction:
    """(a + w - N)_N / (w - N)_N with w = N/z."""
    a = as_rational(a)
    z = as_rational(z)
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    w = Fraction(N) / z
    return _poch_ratio(a + w - N, w - N, N, "N/z-N")


# ---------------------------------------------------------------------------
# discretized Euler integrals


def _integral_rhs(a: Fraction, b: Fraction, N: int, inner) -> Fraction:
    """(a)_N (b-a)_N / ((b)_N N!) * sum_n wt_a(n) wt_{b-a}(N-n) * inner(n)."""
    _screen(b, N, "b")
    prefactor = rising_factorial(a, N) * rising_factorial(b - a, N) / (rising_factorial(b, N) * factorial(N))
    total = Fraction(0)
    for n in range(N + 1):
        total += _disc_weight(a, n, N, "a") * _disc_weight(b - a, N - n, N, "b-a") * inner(n)
    return prefactor * total


def gen_tHG_int_rhs(a, inner_upper: Sequence, inner_lower: Sequence, b, z, N: int) -> Fraction:
    """Discretized integral for the truncated (p+1)F(q+1) with leading parameters a / b.

    The inner pFq at order n is taken at argument (n/N) z, whose N/z-ratio
    n / ((n/N) z) equals N/z for every n > 0; at n = 0 it is the constant 1.
    """
    a, b, z = as_rational(a), as_rational(b), as_rational(z)
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    upper = [as_rational(x) for x in inner_upper]
    lower = [as_rational(x) for x in inner_lower]
    w = Fraction(N) / z

    def inner(n):
        if n == 0:
            return Fraction(1)
        return _bracket_w(upper, lower, w, n)

    return _integral_rhs(a, b, N, inner)


def tHG_int_rhs(a, b, c, z, N: int) -> Fraction:
    """Discretized Euler integral for the truncated 2F1, inner 1F0 in closed form."""
    a, b, c, z = (as_rational(x) for x in (a, b, c, z))
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    w = Fraction(N) / z

    def inner(n):
        return _poch_ratio(b + w - n, w - n, n, f"N/z-{n}")

    return _integral_rhs(a, c, N, inner)


def chain_sum_pFp(upper: Sequence, lower: Sequence, N: int) -> Fraction:
    """Terminating (p+1)F(p) at 1 as a sum over chains 0 = n_0 <= ... <= n_p = N."""
    upper = [as_rational(x) for x in upper]
    lower = [as_rational(x) for x in lower]
    if len(upper) != len(lower) or not upper:
        raise ValueError("need p >= 1 upper and p lower parameters")
    p = len(upper)
    for j, b in enumerate(lower):
        _screen(b, N, f"b{j + 1}")

    def factor(j, lo, hi):
        a, b = upper[j], lower[j]
        return (binomial(hi, lo) * rising_factorial(a, lo) * rising_factorial(b - a, hi - lo)
                / rising_factorial(b, hi))

    def descend(j, lo):
        # j counts finished links; the last link is pinned to N
        if j == p - 1:
            return factor(j, lo, N)
        return sum((factor(j, lo, hi) * descend(j + 1, hi) for hi in range(lo, N + 1)), Fraction(0))

    return descend(0, 0)


def transform_3F2_sides(a, b, d, e, N: int) -> tuple[Fraction, Fraction]:
    """3F2(a,b,-N; d,e; 1) and (e-a)_N/(e)_N * 3F2(a, d-b, -N; d, a+1-N-e; 1)."""
    a, b, d, e = (as_rational(x) for x in (a, b, d, e))
    # both sides are N-term sums as rational functions; an early zero upper
    # parameter must not hide a vanishing lower one
    for label, x in (("d", d), ("e", e), ("a+1-N-e", a + 1 - N - e)):
        _screen(x, N, label)
    left = terminating_pFq_at_1((a, b, -N), (d, e))
    right = _poch_ratio(e - a, e, N, "e") * terminating_pFq_at_1((a, d - b, -N), (d, a + 1 - N - e))
    return left, right


# ---------------------------------------------------------------------------
# finite Gauss, Pfaff, Euler


def finite_gauss_sides(a, b, c, N: int) -> tuple[Fraction, Fraction]:
    """Truncated 2F1 at z = N/(N+c-a-b) against its Pfaff-Saalschutz product."""
    a, b, c = (as_rational(x) for x in (a, b, c))
    w = N + c - a - b
    if w == 0:
        raise DegenerateArgument("N+c-a-b")
    left = _bracket_w((a, b), (c,), w, N)
    _screen(c, N, "c")
    _screen(c - a - b, N, "c-a-b")
    right = (rising_factorial(c - a, N) * rising_factorial(c - b, N)
             / (rising_factorial(c, N) * rising_factorial(c - a - b, N)))
    return left, right


def finite_pfaff_sides(a, b, c, z, N: int) -> tuple[Fraction, Fraction]:
    a, b, c, z = (as_rational(x) for x in (a, b, c, z))
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    w = Fraction(N) / z
    w2 = N - w + 1 - b
    if N and w2 == 0:
        raise DegenerateArgument("N-N/z+1-b")
    left = _bracket_w((a, b), (c,), w, N)
    right = _poch_ratio(b + w - N, w - N, N, "N/z-N") * _bracket_w((c - a, b), (c,), w2, N)
    return left, right


def finite_euler_sides(a, b, c, z, N: int) -> tuple[Fraction, Fraction]:
    a, b, c, z = (as_rational(x) for x in (a, b, c, z))
    if z == 0:
        raise ValueError("the argument z must be nonzero")
    w = Fraction(N) / z
    w2 = w + a + b - c
    if N and w2 == 0:
        raise DegenerateArgument("N/z+a+b-c")
    left = _bracket_w((a, b), (c,), w, N)
    right = (_poch_ratio(a + b - c + w - N, w - N, N, "N/z-N")
             * _bracket_w((c - a, c - b), (c,), w2, N))
    return left, right
