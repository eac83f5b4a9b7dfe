"""Ohno-Zagier type generating functions for truncated multiple polylogarithms.

The generating function Phi_0^(N)(X, Y, Z; z) is built three ways:

* ``phi0_direct``: sum of truncated polylogarithms over admissible indices,
  graded by X^{k-r-h} Y^{r-h} Z^{h-1};
* ``phi0_product_form``: the product over 0 < m < n of
  (m^2 + (Y-X)m + Z - XY) / (m(m-X)), times 1/(n(n-X));
* ``phi0_closed_form``: the already-divided truncated 2F1 with parameters
  alpha - X, beta - X over 1 - X.

alpha and beta (roots of t^2 - (X+Y)t + Z) never appear on their own; every
formula only uses their symmetric functions.  Division by Z - XY is never done
by series inversion (Z - XY is not a unit); the undivided numerators are
reduced by Z - XY with Z as leading variable and the remainder must vanish.

``z=None`` in :class:`GenFunConfig` selects the symbolic argument
z = N/(N - Y), for which the disc factor (N-n)_n / (N-Y-n)_n becomes the
series prod_{j<=n} (1 - Y/(N-j))^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .errors import DivisionFailure, Pole, UnderdeterminedSystem
from .exact import as_rational, rising_factorial, rising_factorial_is_zero
from .polylog import enumerate_I0, enumerate_I0_tilde, mzv_profile, tilde_zeta, truncated_mpl, truncated_zeta
from .series import TruncatedSeries, newton_power_sums, series_exp, series_invert

__all__ = [
    "GenFunConfig",
    "ReconstructedP",
    "ZetaPolynomial",
    "divide_by_z_minus_xy",
    "divisibility_check",
    "phi0_closed_form",
    "phi0_direct",
    "phi0_product_form",
    "prop54_sides",
    "reconstruct_P",
    "symmetry_check",
    "tOZ_special_sides",
    "tilde_sum",
    "weighted_partitions",
]


@dataclass(frozen=True)
class GenFunConfig:
    N: int
    z: Fraction | None = None
    D: int = 6

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.D < 0:
            raise ValueError("degree bound must be nonnegative")
        if self.z is not None:
            z = as_rational(self.z)
            if z == 0:
                raise ValueError("the argument z must be nonzero")
            object.__setattr__(self, "z", z)

    @property
    def symbolic(self) -> bool:
        return self.z is None

    def at_degree(self, D: int) -> "GenFunConfig":
        return GenFunConfig(self.N, self.z, D)

    def describe(self) -> str:
        z = "N/(N-Y)" if self.symbolic else str(self.z)
        return f"N={self.N}, z={z}, D={self.D}"


def _gens(D: int):
    return TruncatedSeries.gens(D)


class _DiscFactors:
    """(N-n)_n / (N/z - n)_n for 0 <= n < N, as constants or (symbolic z) series."""

    def __init__(self, cfg: GenFunConfig, D: int):
        self.cfg = cfg
        self.D = D
        N = cfg.N
        one = TruncatedSeries.one(D)
        factors = [one]
        if cfg.symbolic:
            Y = TruncatedSeries.variable("Y", D)
            acc = one
            for j in range(1, N):
                acc = acc * series_invert(one - Y * Fraction(1, N - j))
                factors.append(acc)
        else:
            w = Fraction(N) / cfg.z
            for n in range(1, N):
                if rising_factorial_is_zero(w - n, n):
                    raise Pole(f"(N/z-{n})_{n} with N={N}, z={cfg.z}")
                factors.append(one * (rising_factorial(N - n, n) / rising_factorial(w - n, n)))
        self._factors = factors

    def __getitem__(self, n: int) -> TruncatedSeries:
        return self._factors[n]


def _phi0_triples(D: int):
    """(k, r, h) with nonnegative exponents and monomial degree k - h - 1 <= D."""
    for h in range(1, D + 2):
        for k in range(2 * h, D + h + 2):
            for r in range(h, k - h + 1):
                yield k, r, h, (k - r - h, r - h, h - 1)


def phi0_direct(cfg: GenFunConfig) -> TruncatedSeries:
    """Phi_0^(N) from its definition: G_0^(N)(k, r, h; z) X^{k-r-h} Y^{r-h} Z^{h-1}."""
    D, N = cfg.D, cfg.N
    result = TruncatedSeries.zero(D)
    if N == 1:
        return result
    if cfg.symbolic:
        disc = _DiscFactors(cfg, D)
        for k, r, h, e in _phi0_triples(D):
            indices = enumerate_I0(k, r, h)
            if not indices:
                continue
            profile = [Fraction(0)] * N
            for idx in indices:
                for m, c in enumerate(mzv_profile(idx, N)):
                    profile[m] += c
            mono = TruncatedSeries({e: 1}, D)
            g = TruncatedSeries.zero(D)
            for m in range(1, N):
                if profile[m]:
                    g = g + disc[m] * profile[m]
            result = result + mono * g
        return result
    coeffs = {}
    for k, r, h, e in _phi0_triples(D):
        g = sum((truncated_mpl(idx, cfg.z, N) for idx in enumerate_I0(k, r, h)), Fraction(0))
        if g:
            coeffs[e] = g
    return TruncatedSeries(coeffs, D)


def _quadratic(m: int, D: int) -> TruncatedSeries:
    """(m + alpha - X)(m + beta - X) = m^2 + (Y - X)m + Z - XY."""
    X, Y, Z = _gens(D)
    return X.like(m * m) + (Y - X) * m + Z - X * Y


def phi0_product_form(cfg: GenFunConfig) -> TruncatedSeries:
    D, N = cfg.D, cfg.N
    X, _, _ = _gens(D)
    disc = _DiscFactors(cfg, D)
    result = TruncatedSeries.zero(D)
    prod = X.like(1)
    for n in range(1, N):
        result = result + prod * series_invert(X.like(n) * (X.like(n) - X)) * disc[n]
        prod = prod * _quadratic(n, D) * series_invert(X.like(n) * (X.like(n) - X))
    return result


def _shifted_poch(n: int, D: int) -> TruncatedSeries:
    """(1 - X)_n = (1-X)(2-X)...(n-X)."""
    X, _, _ = _gens(D)
    p = X.like(1)
    for j in range(1, n + 1):
        p = p * (X.like(j) - X)
    return p


def phi0_closed_form(cfg: GenFunConfig) -> TruncatedSeries:
    """sum_{0<n<N} (1+alpha-X)_{n-1} (1+beta-X)_{n-1} / ((1-X)_n n!) * disc(n)."""
    D, N = cfg.D, cfg.N
    disc = _DiscFactors(cfg, D)
    result = TruncatedSeries.zero(D)
    numer = TruncatedSeries.one(D)
    for n in range(1, N):
        den = _shifted_poch(n, D) * factorial(n)
        result = result + numer * series_invert(den) * disc[n]
        numer = numer * _quadratic(n, D)
    return result


def undivided_2F1_minus_one(cfg: GenFunConfig) -> TruncatedSeries:
    """(N)-truncated 2F1(alpha-X, beta-X; 1-X; z) - 1 at bound cfg.D, written through
    (alpha-X+j)(beta-X+j) = j^2 + (Y-X)j + Z - XY."""
    D, N = cfg.D, cfg.N
    disc = _DiscFactors(cfg, D)
    result = TruncatedSeries.zero(D)
    numer = TruncatedSeries.one(D)
    for n in range(1, N):
        numer = numer * _quadratic(n - 1, D)
        den = _shifted_poch(n, D) * factorial(n)
        result = result + numer * series_invert(den) * disc[n]
    return result


def divide_by_z_minus_xy(s: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Divide by Z - XY with Z leading: returns (quotient, remainder).

    The quotient is exact below the numerator's bound and is returned with
    bound ``s.degree - 2``; the remainder has no Z and is exact up to
    ``s.degree``.
    """
    if s.variables != ("X", "Y", "Z"):
        raise ValueError("division by Z - XY needs variables X, Y, Z")
    if s.degree < 2:
        raise ValueError("numerator bound must be at least 2")
    bound = s.degree
    work = dict(s.items())
    quotient: dict = {}
    # each step lowers the Z-exponent by one, so sweeping top-down terminates
    top = max((e[2] for e in work), default=0)
    for c in range(top, 0, -1):
        for e in [e for e in work if e[2] == c]:
            v = work.pop(e)
            a, b, _ = e
            q = (a, b, c - 1)
            quotient[q] = quotient.get(q, 0) + v
            spill = (a + 1, b + 1, c - 1)
            if sum(spill) <= bound:
                work[spill] = work.get(spill, 0) + v
    remainder = TruncatedSeries({e: v for e, v in work.items() if v}, bound)
    return TruncatedSeries(quotient, bound - 2), remainder


def _divide_exact(numerator: TruncatedSeries, what: str) -> TruncatedSeries:
    q, rem = divide_by_z_minus_xy(numerator)
    if not rem.is_zero():
        raise DivisionFailure(f"{what} is not divisible by Z - XY; remainder {rem.render()}")
    return q


def divisibility_check(cfg: GenFunConfig) -> bool:
    """True iff 2F1^(N)(...) - 1 is divisible by Z - XY with quotient phi0_closed_form."""
    numerator = undivided_2F1_minus_one(cfg.at_degree(cfg.D + 2))
    q, rem = divide_by_z_minus_xy(numerator)
    return rem.is_zero() and q == phi0_closed_form(cfg)


# ---------------------------------------------------------------------------
# the special argument z = N/(N-Y)


def _s2_numerator(N: int, D2: int) -> TruncatedSeries:
    X, Y, Z = _gens(D2)
    acc = X.like(1)
    for n in range(1, N):
        top = X.like(n * n) - (X + Y) * n + Z
        acc = acc * top * series_invert((X.like(n) - X) * (X.like(n) - Y))
    return acc - 1


def _s3_numerator(D2: int, zeta) -> TruncatedSeries:
    """exp(sum_k zeta(k)/k (X^k + Y^k - p_k)) - 1; ``zeta`` may return symbols.

    p_k has a Z^{k/2} term of total degree ceil(k/2), so the sum runs to k = 2*D2.
    """
    X, Y, _ = _gens(D2)
    top = 2 * D2
    sums = newton_power_sums(D2, top)
    exponent = TruncatedSeries.zero(D2)
    xk, yk = X, Y
    for k in range(2, top + 1):
        xk, yk = xk * X, yk * Y
        exponent = exponent + (xk + yk - sums[k]) * (zeta(k) * Fraction(1, k))
    return series_exp(exponent) - 1


def tOZ_special_sides(N: int, D: int = 6) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """(s1, s2, s3): Phi_0^(N) at z = N/(N-Y), the Pochhammer-quotient form and the exp form."""
    if N < 2:
        raise ValueError("N must be at least 2")
    s1 = phi0_direct(GenFunConfig(N, None, D))
    s2 = _divide_exact(_s2_numerator(N, D + 2), "Pochhammer quotient numerator")
    s3 = _divide_exact(_s3_numerator(D + 2, lambda k: truncated_zeta(k, N)), "exp-form numerator")
    return s1, s2, s3


def _monomial(k: int, q: int, h: int) -> tuple[int, int, int]:
    e = (k - q - h, q - h, h - 1)
    if min(e) < 0:
        raise ValueError(f"(k, q, h) = {(k, q, h)} does not index a monomial")
    return e


def tilde_sum(k: int, q: int, h: int, N: int) -> Fraction:
    """Sum of tilde_zeta over the extended index set (k, q, h)."""
    return sum((tilde_zeta(x.index, x.l, N) for x in enumerate_I0_tilde(k, q, h)), Fraction(0))


def prop54_sides(k: int, q: int, h: int, N: int) -> tuple[Fraction, Fraction]:
    """Coefficient of X^{k-q-h} Y^{q-h} Z^{h-1} in Phi_0^(N)(z = N/(N-Y)) and the tilde-zeta sum."""
    e = _monomial(k, q, h)
    series = phi0_direct(GenFunConfig(N, None, sum(e)))
    return series[e], tilde_sum(k, q, h, N)


def symmetry_check(k: int, q: int, h: int, N: int) -> tuple[Fraction, Fraction]:
    _monomial(k, q, h)
    _monomial(k, k - q, h)
    return tilde_sum(k, q, h, N), tilde_sum(k, k - q, h, N)


# ---------------------------------------------------------------------------
# polynomials in the symbols Z2, Z3, ...


class ZetaPolynomial:
    """Sparse polynomial over Q in symbols Z_2, Z_3, ... (Z_j has weight j).

    Monomials are tuples of ``(j, exponent)`` pairs sorted by j.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        self._terms = {tuple(m): Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def symbol(cls, j: int) -> "ZetaPolynomial":
        return cls({((j, 1),): 1})

    @classmethod
    def const(cls, c) -> "ZetaPolynomial":
        return cls({(): c})

    @staticmethod
    def _lift(other):
        if isinstance(other, ZetaPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return ZetaPolynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return ZetaPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaPolynomial({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, ZetaPolynomial):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                exps = dict(m1)
                for j, e in m2:
                    exps[j] = exps.get(j, 0) + e
                m = tuple(sorted(exps.items()))
                out[m] = out.get(m, 0) + c1 * c2
        return ZetaPolynomial(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def items(self):
        return self._terms.items()

    @staticmethod
    def weight_of(m) -> int:
        return sum(j * e for j, e in m)

    def weights(self) -> set[int]:
        return {self.weight_of(m) for m in self._terms}

    def is_homogeneous(self, weight: int) -> bool:
        return self.weights() <= {weight}

    def substitute(self, values: Mapping[int, Fraction] | callable) -> Fraction:
        get = values if callable(values) else values.__getitem__
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for j, e in m:
                t *= Fraction(get(j)) ** e
            total += t
        return total

    def render(self) -> str:
        terms = sorted(self._terms.items(), key=lambda kv: (self.weight_of(kv[0]), tuple((-j, -e) for j, e in kv[0])))
        pieces = []
        for m, c in terms:
            mono = "*".join(f"Z{j}" if e == 1 else f"Z{j}^{e}" for j, e in m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces) or "0"

    __str__ = render

    def __repr__(self):
        return f"ZetaPolynomial({self.render()!r})"


def weighted_partitions(k: int, smallest: int = 2) -> list[tuple[int, ...]]:
    """Partitions of k into parts >= 2: the monomials of weight k in Z2, Z3, ..."""
    if k == 0:
        return [()]
    out = []
    for first in range(smallest, k + 1):
        for rest in weighted_partitions(k - first, first):
            out.append((first,) + rest)
    return out


@dataclass
class ReconstructedP:
    k: int
    q: int
    h: int
    polynomial: ZetaPolynomial
    checks: dict[int, tuple[Fraction, Fraction]] = field(default_factory=dict)

    @property
    def validated(self) -> bool:
        return all(a == b for a, b in self.checks.values())


def reconstruct_P(k: int, q: int, h: int, N_samples: Iterable[int] | None = None) -> ReconstructedP:
    """Read P_{k,q,h} off the exp form with zeta^(N)(j) kept as the symbol Z_j.

    With ``N_samples`` the polynomial is substituted with truncated zeta values
    for each N and compared against the direct tilde-zeta sum.  Fewer samples
    than monomials of weight k cannot pin a polynomial down, so that raises
    :class:`UnderdeterminedSystem`.
    """
    e = _monomial(k, q, h)
    D = sum(e)
    quotient = _divide_exact(_s3_numerator(D + 2, ZetaPolynomial.symbol), "symbolic exp-form numerator")
    poly = quotient[e]
    if not isinstance(poly, ZetaPolynomial):
        poly = ZetaPolynomial.const(poly)
    result = ReconstructedP(k, q, h, poly)
    if N_samples is None:
        return result
    samples = sorted(set(N_samples))
    needed = len(weighted_partitions(k))
    if len(samples) < needed:
        raise UnderdeterminedSystem(
            f"{len(samples)} sample(s) for {needed} monomials of weight {k}")
    for N in samples:
        result.checks[N] = (poly.substitute(lambda j: truncated_zeta(j, N)), tilde_sum(k, q, h, N))
    return result
