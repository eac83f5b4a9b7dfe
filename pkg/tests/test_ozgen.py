import math
from fractions import Fraction as F

import pytest

from finitehyper import ozgen as oz
from finitehyper.errors import Pole, UnderdeterminedSystem
from finitehyper.series import TruncatedSeries, coefficient

import oracles


def cfg(N, z, D):
    return oz.GenFunConfig(N, z, D)


def test_phi0_examples():
    c = cfg(2, F(1, 2), 0)
    assert oz.phi0_direct(c).constant_term == F(1, 3)
    assert oz.phi0_product_form(c).constant_term == F(1, 3)
    assert oz.phi0_closed_form(c).constant_term == F(1, 3)
    assert oz.phi0_direct(cfg(1, F(2, 3), 3)).is_zero()
    assert oz.phi0_product_form(cfg(1, F(2, 3), 3)).is_zero()
    assert oz.divisibility_check(cfg(1, F(2, 3), 3))


@pytest.mark.parametrize("N, z", [(3, F(1, 2)), (4, F(1, 3)), (5, F(3, 4)), (4, F(-2, 5))])
def test_phi0_direct_coefficients_are_mpl_sums(N, z):
    D = 3
    s = oz.phi0_direct(cfg(N, z, D))
    for k in range(2, D + 4):
        for r in range(1, k):
            for h in range(1, r + 1):
                e = (k - r - h, r - h, h - 1)
                if min(e) < 0 or sum(e) > D:
                    continue
                expected = sum((oracles.mpl(idx, z, N) for idx in oracles.I0(k, r, h)), F(0))
                assert coefficient(s, e) == expected, (k, r, h)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
@pytest.mark.parametrize("z", [F(1, 2), F(1, 3), F(3, 4), F(2)])
def test_three_way_small(N, z):
    c = cfg(N, z, 4)
    try:
        direct = oz.phi0_direct(c)
    except Pole:
        # N/z a positive integer <= N - 1 puts a pole in every form
        assert (F(N) / z).denominator == 1 and F(N) / z < N
        with pytest.raises(Pole):
            oz.phi0_closed_form(c)
        return
    assert direct == oz.phi0_product_form(c) == oz.phi0_closed_form(c)
    assert oz.divisibility_check(c)


def test_division_by_z_minus_xy():
    X, Y, Z = TruncatedSeries.gens(6)
    s = (1 + X - 3 * Y * Z + X**2 * Y) * (Z - X * Y)
    quotient, remainder = oz.divide_by_z_minus_xy(s)
    assert remainder.is_zero()
    assert quotient == (1 + X - 3 * Y * Z + X**2 * Y).truncate(4)
    _, remainder = oz.divide_by_z_minus_xy(s + X**3)
    assert not remainder.is_zero()


def test_special_sides():
    s1, s2, s3 = oz.tOZ_special_sides(3, 4)
    assert s1 == s2 == s3
    assert s1.constant_term == F(5, 4)
    assert s2.swap("X", "Y") == s2
    assert s3.swap("X", "Y") == s3


def test_prop54_examples():
    assert oz.prop54_sides(3, 1, 1, 3) == (F(9, 8), F(9, 8))
    assert oz.prop54_sides(3, 2, 1, 3) == (F(9, 8), F(9, 8))
    for N in range(1, 6):
        lhs, rhs = oz.prop54_sides(2, 1, 1, N)
        assert lhs == rhs == oracles.mzv((2,), N)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_prop54_against_brute_force(k):
    N = 5
    for h in range(1, k):
        for q_ in range(h, k - h + 1):
            lhs, rhs = oz.prop54_sides(k, q_, h, N)
            assert lhs == rhs == oracles.tilde_sum(k, q_, h, N)


def test_symmetry():
    assert oz.symmetry_check(3, 1, 1, 3) == (F(9, 8), F(9, 8))
    a, b = oz.symmetry_check(4, 1, 1, 5)
    assert a == b == oracles.tilde_sum(4, 3, 1, 5)
    a, b = oz.symmetry_check(4, 2, 1, 6)
    assert a == b


def test_zeta_polynomial_render():
    Z = oz.ZetaPolynomial.symbol
    p = F(3, 2) * Z(4) - F(1, 2) * Z(2) * Z(2)
    assert p.render() == "3/2*Z4 - 1/2*Z2^2"
    assert p.is_homogeneous(4)
    assert p.substitute({2: 2, 4: 1}) == F(-1, 2)
    assert oz.ZetaPolynomial().render() == "0"
    assert (-Z(5) + Z(2) * Z(3)).render() == "-Z5 + Z2*Z3"


def test_reconstruct_golden():
    assert oz.reconstruct_P(2, 1, 1).polynomial.render() == "Z2"
    assert oz.reconstruct_P(3, 1, 1).polynomial.render() == "Z3"
    assert oz.reconstruct_P(4, 2, 1).polynomial.render() == "3/2*Z4 - 1/2*Z2^2"
    with pytest.raises(UnderdeterminedSystem):
        oz.reconstruct_P(6, 2, 1, [2, 3])


def _fit(k, q_, h, samples):
    """Least-squares-free exact fit of P over monomials of weight k."""
    parts = oracles.partitions(k)
    rows, rhs = [], []
    for N in samples:
        rows.append([math.prod((oracles.mzv((j,), N) for j in part), start=F(1)) for part in parts])
        rhs.append(oracles.tilde_sum(k, q_, h, N))
    coeffs = oracles.rref_solve(rows, rhs)
    assert coeffs is not None, "direct sums are not a polynomial in the truncated zeta values"
    out = {}
    for part, c in zip(parts, coeffs):
        if c:
            mono = tuple(sorted((j, part.count(j)) for j in set(part)))
            out[mono] = c
    return oz.ZetaPolynomial(out)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_reconstruct_matches_linear_fit(k):
    for h in range(1, k):
        for q_ in range(h, k - h + 1):
            result = oz.reconstruct_P(k, q_, h, range(2, 9))
            assert result.validated
            assert result.polynomial.is_homogeneous(k)
            assert result.polynomial == _fit(k, q_, h, range(2, 11))
