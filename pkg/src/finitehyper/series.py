"""Truncated multivariate power series in X, Y, Z.

A :class:`TruncatedSeries` stores its coefficients sparsely, keyed by exponent
tuples, and drops every monomial whose total degree exceeds the declared bound.
Coefficients are normally :class:`~fractions.Fraction`, but any commutative
ring element that mixes with Fractions (for instance
:class:`finitehyper.ozgen.ZetaPolynomial`) works for the ring operations and
``exp``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from .errors import (
    BoundMismatch,
    ConstantTermNotOne,
    DegreeOutOfBound,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
)

VARIABLES = ("X", "Y", "Z")
DEFAULT_DEGREE = 8

__all__ = [
    "DEFAULT_DEGREE",
    "PowerSumTable",
    "TruncatedSeries",
    "coefficient",
    "format_coefficient",
    "newton_power_sums",
    "series_add",
    "series_exp",
    "series_invert",
    "series_log",
    "series_mul",
]


def _is_zero(c) -> bool:
    return not c


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


class TruncatedSeries:
    """Power series truncated at total degree ``degree``."""

    __slots__ = ("variables", "degree", "_coeffs")

    def __init__(self, coeffs: Mapping[tuple, object] | None = None, degree: int = DEFAULT_DEGREE,
                 variables: Iterable[str] = VARIABLES):
        if degree < 0:
            raise ValueError("degree bound must be nonnegative")
        self.variables = tuple(variables)
        if not set(self.variables) <= set(VARIABLES) or len(set(self.variables)) != len(self.variables):
            raise ValueError(f"variables must be distinct names from {VARIABLES}")
        self.degree = degree
        n = len(self.variables)
        data = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent tuple {e}")
            if sum(e) <= degree and not _is_zero(c):
                data[e] = _coerce(c)
        self._coeffs = data

    # constructors ------------------------------------------------------------

    @classmethod
    def _raw(cls, data: dict, degree: int, variables: tuple) -> "TruncatedSeries":
        s = cls.__new__(cls)
        s.variables = variables
        s.degree = degree
        s._coeffs = data
        return s

    @classmethod
    def constant(cls, c, degree: int = DEFAULT_DEGREE, variables=VARIABLES) -> "TruncatedSeries":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, degree, variables)

    @classmethod
    def zero(cls, degree: int = DEFAULT_DEGREE, variables=VARIABLES) -> "TruncatedSeries":
        return cls({}, degree, variables)

    @classmethod
    def one(cls, degree: int = DEFAULT_DEGREE, variables=VARIABLES) -> "TruncatedSeries":
        return cls.constant(1, degree, variables)

    @classmethod
    def variable(cls, name: str, degree: int = DEFAULT_DEGREE, variables=VARIABLES) -> "TruncatedSeries":
        variables = tuple(variables)
        e = tuple(int(v == name) for v in variables)
        if sum(e) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls({e: 1}, degree, variables)

    @classmethod
    def gens(cls, degree: int = DEFAULT_DEGREE, variables=VARIABLES) -> tuple["TruncatedSeries", ...]:
        return tuple(cls.variable(v, degree, variables) for v in variables)

    def like(self, c) -> "TruncatedSeries":
        """Constant ``c`` with this series' bound and variables."""
        return TruncatedSeries.constant(c, self.degree, self.variables)

    def truncate(self, degree: int) -> "TruncatedSeries":
        if degree > self.degree:
            raise BoundMismatch(f"cannot raise bound {self.degree} to {degree}")
        return TruncatedSeries._raw(
            {e: c for e, c in self._coeffs.items() if sum(e) <= degree}, degree, self.variables)

    # inspection --------------------------------------------------------------

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, exponents) -> object:
        return coefficient(self, exponents)

    @property
    def constant_term(self):
        return self._coeffs.get((0,) * len(self.variables), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def map_coefficients(self, f) -> "TruncatedSeries":
        return TruncatedSeries({e: f(c) for e, c in self._coeffs.items()}, self.degree, self.variables)

    def swap(self, a: str, b: str) -> "TruncatedSeries":
        """Exchange two variables, e.g. X <-> Y."""
        i, j = self.variables.index(a), self.variables.index(b)
        out = {}
        for e, c in self._coeffs.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return TruncatedSeries._raw(out, self.degree, self.variables)

    # arithmetic --------------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if self.degree != other.degree or self.variables != other.variables:
            raise BoundMismatch(
                f"series over {self.variables}@{self.degree} vs {other.variables}@{other.degree}")

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        return self.like(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            v = out.get(e, 0) + c
            if _is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return TruncatedSeries._raw(out, self.degree, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw({e: -c for e, c in self._coeffs.items()}, self.degree, self.variables)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = _coerce(other)
            if _is_zero(other):
                return TruncatedSeries.zero(self.degree, self.variables)
            return TruncatedSeries._raw({e: c * other for e, c in self._coeffs.items()},
                                        self.degree, self.variables)
        self._check(other)
        D = self.degree
        out: dict = {}
        # bucket the right factor by degree so truncated pairs are skipped early
        right = sorted(other._coeffs.items(), key=lambda kv: sum(kv[0]))
        for e1, c1 in self._coeffs.items():
            d1 = sum(e1)
            for e2, c2 in right:
                if d1 + sum(e2) > D:
                    break
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedSeries._raw({e: c for e, c in out.items() if not _is_zero(c)},
                                    D, self.variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * series_invert(other)
        return self * (Fraction(1) / Fraction(other) if isinstance(other, int) else 1 / other)

    def __rtruediv__(self, other):
        return self._lift(other) * series_invert(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.like(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == self.like(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, self.variables, frozenset(self._coeffs.items())))

    # rendering ---------------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lex order: by total degree, then exponents descending."""
        return sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def render(self) -> str:
        """Canonical text form used by reports and golden files."""
        return render_terms(self.sorted_terms(), self.variables)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"TruncatedSeries({self.render()!r}, degree={self.degree})"


def format_coefficient(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return f"({c})"


def render_terms(terms, names) -> str:
    pieces = []
    for e, c in terms:
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if not mono:
            body = format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coefficient(mag)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces) or "0"


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    s._check(t)
    return s + t


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    s._check(t)
    return s * t


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse, by t = c^{-1} (1 + u + u^2 + ... + u^D) with u = 1 - s/c."""
    c = s.constant_term
    if _is_zero(c):
        raise NonUnitConstantTerm(f"constant term of {s.render()} is zero")
    c = _coerce(c)
    inv_c = Fraction(1) / c if isinstance(c, Fraction) else 1 / c
    u = s.like(1) - s * inv_c
    # u has zero constant term, so its D-th power already exhausts the bound
    total = s.like(1)
    power = s.like(1)
    for _ in range(s.degree):
        power = power * u
        if power.is_zero():
            break
        total = total + power
    return total * inv_c


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """sum_{j=0}^{D} s^j / j!; requires a zero constant term."""
    if not _is_zero(s.constant_term):
        raise NonzeroConstantTerm(f"exp needs zero constant term, got {s.constant_term}")
    total = s.like(1)
    term = s.like(1)
    for j in range(1, s.degree + 1):
        term = term * s * Fraction(1, j)
        if term.is_zero():
            break
        total = total + term
    return total


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """-sum_{j=1}^{D} (1 - s)^j / j; requires constant term 1."""
    if s.constant_term != 1:
        raise ConstantTermNotOne(f"log needs constant term 1, got {s.constant_term}")
    u = s.like(1) - s
    total = TruncatedSeries.zero(s.degree, s.variables)
    power = s.like(1)
    for j in range(1, s.degree + 1):
        power = power * u
        if power.is_zero():
            break
        total = total - power * Fraction(1, j)
    return total


def coefficient(s: TruncatedSeries, exponents) -> object:
    exponents = tuple(exponents)
    if len(exponents) != len(s.variables):
        raise ValueError(f"expected {len(s.variables)} exponents, got {exponents}")
    if sum(exponents) > s.degree:
        raise DegreeOutOfBound(f"{exponents} exceeds degree bound {s.degree}")
    return s._coeffs.get(exponents, Fraction(0))


class PowerSumTable:
    """p_k = alpha^k + beta^k as polynomials in X, Y, Z, where alpha + beta = X + Y
    and alpha * beta = Z."""

    def __init__(self, degree: int, count: int | None = None):
        if degree < 1:
            raise ValueError("power-sum table needs degree bound >= 1")
        self.degree = degree
        # Z has degree 1, so p_k keeps terms of degree ceil(k/2) <= degree up to k = 2*degree
        self.count = degree if count is None else count
        X, Y, Z = TruncatedSeries.gens(degree)
        e1, e2 = X + Y, Z
        prev, cur = X.like(2), e1
        table = [cur]
        for _ in range(2, self.count + 1):
            prev, cur = cur, e1 * cur - e2 * prev
            table.append(cur)
        self._table = table

    def __getitem__(self, k: int) -> TruncatedSeries:
        if not 1 <= k <= self.count:
            raise IndexError(f"power sum p_{k} outside 1..{self.count}")
        return self._table[k - 1]

    def __len__(self):
        return self.count

    def __iter__(self):
        return iter(self._table)


def newton_power_sums(degree: int, count: int | None = None) -> PowerSumTable:
    """p_1..p_count at truncation bound ``degree`` (count defaults to degree)."""
    return PowerSumTable(degree, count)


def monomials(degree: int, nvars: int = 3):
    """All exponent tuples of total degree <= ``degree``."""
    for e in product(range(degree + 1), repeat=nvars):
        if sum(e) <= degree:
            yield e
