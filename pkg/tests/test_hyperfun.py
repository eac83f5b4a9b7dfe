from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from finitehyper import hyperfun as hf
from finitehyper.errors import DegenerateArgument, Pole

import oracles

q = st.builds(F, st.integers(-12, 12), st.integers(1, 6))
qnz = q.filter(bool)


def H(upper, lower, z, N):
    return hf.HyperParams(tuple(upper), tuple(lower), z, N)


def defined(f, *args):
    """Evaluate, discarding the example if it sits on a pole."""
    try:
        return f(*args)
    except (Pole, DegenerateArgument, ZeroDivisionError):
        assume(False)


# -- beta -------------------------------------------------------------------

def test_truncated_beta_examples():
    assert hf.truncated_beta(hf.BetaParams(F(1, 2), F(1, 2), 1)) == 4
    assert hf.truncated_beta(hf.BetaParams(1, 1, 2)) == F(3, 2)
    with pytest.raises(Pole):
        hf.truncated_beta(hf.BetaParams(-1, 1, 2))
    assert hf.disc_beta_sum(hf.BetaParams(1, 1, 2)) == F(3, 2)
    assert hf.disc_beta_sum(hf.BetaParams(F(1, 2), F(1, 2), 1)) == 4


@given(q, q, st.integers(1, 12))
def test_beta_sides_agree_with_oracle(a, b, N):
    p = hf.BetaParams(a, b, N)
    closed = defined(hf.truncated_beta, p)
    disc = defined(hf.disc_beta_sum, p)
    assert closed == disc == oracles.beta_closed(a, b, N) == oracles.beta_sum(a, b, N)


def test_multivariate_beta_examples():
    assert hf.multivariate_disc_beta([1, 1, 1], 1) == (3, 3)
    closed, disc = hf.multivariate_disc_beta([F(1, 2), F(1, 2), 1], 2)
    assert closed == disc == F(16, 3)


@settings(max_examples=40)
@given(st.lists(q, min_size=2, max_size=4), st.integers(1, 5))
def test_multivariate_beta_against_enumeration(a, N):
    got = defined(hf.multivariate_disc_beta, a, N)
    assert got == oracles.multivariate_beta(a, N)
    if len(a) == 2:
        assert got[0] == hf.truncated_beta(hf.BetaParams(a[0], a[1], N))


# -- truncations --------------------------------------------------------------

def test_bracket_examples():
    assert hf.trunc_pFq_bracket(H([5, F(1, 3)], [F(7, 2)], F(2, 9), 0)) == 1
    assert hf.trunc_pFq_bracket(H([1], [], F(1, 2), 2)) == 2
    assert hf.trunc_pFq_bracket(H([F(1, 2), 1], [2], F(1, 2), 1)) == F(5, 4)


@given(st.lists(q, max_size=3), st.lists(q, max_size=2), qnz, st.integers(0, 8))
def test_bracket_matches_definition(upper, lower, z, N):
    value = defined(hf.trunc_pFq_bracket, H(upper, lower, z, N))
    assert value == oracles.pfq_bracket(upper, lower, z, N)


def test_paren_examples():
    assert hf.trunc_2F1_paren(F(3), F(-2), F(5, 3), F(7), 1) == 1
    assert hf.trunc_2F1_paren(F(1, 2), F(1, 2), 1, F(1, 2), 2) == \
        hf.trunc_pFq_bracket(H([F(1, 2), F(1, 2)], [1], F(1, 4), 1)) == F(13, 12)


@given(q, q, q, qnz, st.integers(1, 8))
def test_paren_is_rescaled_bracket(a, b, c, z, N):
    paren = defined(hf.trunc_2F1_paren, a, b, c, z, N)
    assert paren == oracles.pfq_bracket([a, b], [c], F(N - 1) * z / N, N - 1)


def test_terminating_at_one():
    assert hf.terminating_pFq_at_1([F(1, 3), 0], [F(1, 2)]) == 1
    with pytest.raises(ValueError):
        hf.terminating_pFq_at_1([F(1, 2)], [1])


@given(q, q, st.integers(0, 10))
def test_chu_vandermonde(a, b, N):
    value = defined(hf.terminating_pFq_at_1, [a, -N], [b])
    assert value == oracles.pfq_at_1([a, -N], [b])
    if not (a.denominator == 1 and -N < a <= 0):
        assert value == oracles.poch(b - a, N) / oracles.poch(b, N)


@given(q, q, q, qnz, st.integers(1, 8))
def test_bracket_is_terminating_3F2(a, b, c, z, N):
    bracket = defined(hf.trunc_pFq_bracket, H([a, b], [c], z, N))
    assume(not oracles.poch(1 - F(N) / z, N) == 0)
    assert bracket == oracles.pfq_at_1([a, b, -N], [c, 1 - F(N) / z], N)


def test_t1F0_closed_form():
    assert hf.t1F0_closed_form(1, F(1, 2), 2) == 2
    assert hf.t1F0_closed_form(F(2, 3), F(5, 7), 0) == 1
    assert hf.t1F0_closed_form(0, F(-3, 4), 6) == 1


@given(q, qnz, st.integers(0, 10))
def test_t1F0_matches_bracket(a, z, N):
    assert defined(hf.t1F0_closed_form, a, z, N) == defined(hf.trunc_pFq_bracket, H([a], [], z, N))


# -- discretized integrals -----------------------------------------------------

def test_integral_examples():
    assert hf.tHG_int_rhs(F(1, 2), 1, 2, F(1, 2), 1) == F(5, 4)
    assert hf.tHG_int_rhs(F(1, 3), F(4, 5), F(-7, 2), F(3, 8), 0) == 1
    assert hf.gen_tHG_int_rhs(1, [], [], 2, F(1, 2), 1) == hf.trunc_pFq_bracket(H([1], [2], F(1, 2), 1))
    with pytest.raises(Pole):
        hf.gen_tHG_int_rhs(1, [], [], 2, 1, 1)


@given(q, q, q, qnz, st.integers(0, 8))
def test_euler_integral(a, b, c, z, N):
    rhs = defined(hf.tHG_int_rhs, a, b, c, z, N)
    assert rhs == oracles.thg_int_rhs(a, b, c, z, N)
    assert rhs == defined(hf.trunc_pFq_bracket, H([a, b], [c], z, N))


@settings(max_examples=60)
@given(q, q, st.lists(q, max_size=2), st.lists(q, max_size=1), qnz, st.integers(0, 7))
def test_general_integral(a, b, upper, lower, z, N):
    rhs = defined(hf.gen_tHG_int_rhs, a, upper, lower, b, z, N)
    assert rhs == defined(hf.trunc_pFq_bracket, H([a, *upper], [b, *lower], z, N))


def test_chain_sum_examples():
    assert hf.chain_sum_pFp([F(2, 3), 5], [F(1, 7), F(9, 2)], 0) == 1
    a, b = F(1, 3), F(5, 4)
    assert hf.chain_sum_pFp([a], [b], 6) == oracles.poch(b - a, 6) / oracles.poch(b, 6)


@settings(max_examples=60)
@given(st.integers(1, 3).flatmap(lambda p: st.tuples(st.lists(q, min_size=p, max_size=p),
                                                      st.lists(q, min_size=p, max_size=p))),
       st.integers(0, 8))
def test_chain_sum(params, N):
    upper, lower = params
    value = defined(hf.chain_sum_pFp, upper, lower, N)
    assert value == oracles.chain_sum(upper, lower, N)
    assert value == oracles.pfq_at_1([*upper, -N], lower)


# -- transformations -----------------------------------------------------------

def test_transformation_examples():
    assert hf.finite_gauss_sides(F(1, 2), F(1, 2), 2, 1) == (F(9, 8), F(9, 8))
    assert hf.finite_gauss_sides(0, F(1, 3), F(2, 5), 4) == (1, 1)
    assert hf.finite_pfaff_sides(F(1, 2), F(1, 2), 1, F(1, 2), 1) == (F(5, 4), F(5, 4))
    assert hf.finite_pfaff_sides(1, 0, 3, F(1, 2), 3) == (1, 1)
    lhs, rhs = hf.finite_euler_sides(F(1, 3), F(2, 7), F(1, 3), F(1, 2), 4)
    assert lhs == rhs == oracles.pfq_bracket([F(1, 3), F(2, 7)], [F(1, 3)], F(1, 2), 4)


@given(q, q, q, st.integers(1, 10))
def test_gauss(a, b, c, N):
    lhs, rhs = defined(hf.finite_gauss_sides, a, b, c, N)
    assert lhs == rhs


@given(q, q, q, qnz, st.integers(1, 10))
def test_pfaff_and_euler(a, b, c, z, N):
    lhs, rhs = defined(hf.finite_pfaff_sides, a, b, c, z, N)
    assert lhs == rhs == oracles.pfq_bracket([a, b], [c], z, N)
    lhs, rhs = defined(hf.finite_euler_sides, a, b, c, z, N)
    assert lhs == rhs


@given(q, q, q, q, st.integers(0, 10))
def test_3F2_transformation(a, b, d, e, N):
    lhs, rhs = defined(hf.transform_3F2_sides, a, b, d, e, N)
    assert lhs == rhs == oracles.pfq_at_1([a, b, -N], [d, e])


def test_degenerate_argument():
    # c = a + b - N makes the Gauss argument N/(N + c - a - b) undefined
    with pytest.raises(DegenerateArgument):
        hf.finite_gauss_sides(F(1, 2), F(1, 3), F(1, 2) + F(1, 3) - 3, 3)
