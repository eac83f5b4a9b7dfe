"""Exact rational scalars and the combinatorial primitives built on them.

``Rational`` is :class:`fractions.Fraction`: always reduced, positive
denominator, exact arithmetic, ``ZeroDivisionError`` on division by zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DenominatorDivisibleByP

Rational = Fraction

__all__ = [
    "Rational",
    "ResidueClass",
    "as_rational",
    "binomial",
    "factorial",
    "is_nonpositive_integer",
    "reduce_mod_p",
    "rising_factorial",
    "rising_factorial_is_zero",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused so inexact values never leak into identity checks.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def rising_factorial(a, m: int) -> Fraction:
    """Return (a)_m = a(a+1)...(a+m-1); (a)_0 = 1."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    a = as_rational(a)
    # integer fast path keeps the product in int arithmetic
    if a.denominator == 1:
        n = a.numerator
        p = 1
        for j in range(m):
            p *= n + j
        return Fraction(p)
    num, den = a.numerator, a.denominator
    p = 1
    for j in range(m):
        p *= num + j * den
    return Fraction(p, den**m)


def is_nonpositive_integer(a) -> bool:
    a = as_rational(a)
    return a.denominator == 1 and a.numerator <= 0


def rising_factorial_is_zero(a, m: int) -> bool:
    """True iff some factor a+j (0 <= j < m) vanishes."""
    a = as_rational(a)
    return a.denominator == 1 and -m < a.numerator <= 0


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """n choose k, with the convention binomial(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    return math.comb(n, k)


@dataclass(frozen=True)
class ResidueClass:
    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced modulo {self.modulus}")

    def _coerce(self, other) -> int:
        if isinstance(other, ResidueClass):
            if other.modulus != self.modulus:
                raise ValueError("residues modulo different primes")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueClass((self.value + v) % self.modulus, self.modulus)

    __radd__ = __add__

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueClass((self.value * v) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueClass(-self.value % self.modulus, self.modulus)

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


def reduce_mod_p(x, p: int) -> ResidueClass:
    """Image of the rational x in Z/pZ; fails when p divides the denominator."""
    x = as_rational(x)
    if x.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{p} divides the denominator of {x}")
    return ResidueClass(x.numerator * pow(x.denominator, -1, p) % p, p)
