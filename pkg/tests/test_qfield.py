from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qschur.qfield import (
    ONE, Q, QINV, ZERO, Poly, RatFunc, normalize, q_factorial, q_int, q_pow, specialize,
)

q = Poly.q()

# values where no small q-integer vanishes
POINTS = [Fraction(2), Fraction(5, 7), Fraction(-3, 2), Fraction(11, 4)]


def test_normalize_cancels_common_factor():
    assert normalize(q * q - 1, q - 1) == Q + 1


def test_normalize_zero():
    r = normalize(Poly(), q ** 3)
    assert r == ZERO
    assert r.num == Poly() and r.den == Poly([1])


def test_normalize_content():
    assert normalize(Poly([0, 2]), Poly([2])) == Q


def test_normalize_denominator_is_monic():
    r = normalize(Poly([1]), Poly([0, 3]))
    assert r.den == Poly([0, 1])
    assert r.num == Poly([Fraction(1, 3)])


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
        normalize(q, Poly())


def test_q_int_small():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(2) == normalize(q * q + 1, q)
    assert q_int(2) == Q + QINV


def test_q_int_three_matches_division():
    # (q^3 - q^-3)/(q - q^-1) = (q^6 - 1)/(q^2 (q^2 - 1))
    quotient, rem = divmod(q ** 6 - 1, q ** 2 - 1)
    assert rem == Poly()
    assert q_int(3) == normalize(quotient, q ** 2)
    assert q_int(3) == Q * Q + 1 + QINV * QINV


def test_q_int_rejects_negative():
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_factorial_examples():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == Q + QINV
    assert q_factorial(3) == (Q + QINV) * (Q * Q + 1 + QINV * QINV)


@pytest.mark.parametrize("k", range(9))
def test_q_int_telescopes(k):
    assert q_int(k) * (Q - QINV) == q_pow(k) - q_pow(-k)


@pytest.mark.parametrize("a", POINTS)
def test_q_int_values_match_direct_evaluation(a):
    for k in range(6):
        direct = (a ** k - a ** -k) / (a - 1 / a)
        assert specialize(q_int(k), a) == direct


def test_specialize_examples():
    assert specialize(Q + QINV, 2) == Fraction(5, 2)
    with pytest.raises(ValueError, match="specialization pole"):
        specialize((Q - 1).inverse(), 1)
    a = Fraction(5, 7)
    assert specialize(q_factorial(3), a) == (a + 1 / a) * (a * a + 1 + 1 / (a * a))


def test_rendering():
    assert str(Q + QINV) == "(1+q^2)/q"
    assert str(ZERO) == "0"
    assert str(RatFunc(Fraction(-3, 4))) == "-3/4"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


# ---------------------------------------------------------------- properties

small_int = st.integers(-3, 3)
polys = st.lists(small_int, min_size=0, max_size=4).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@st.composite
def ratfuncs(draw):
    return normalize(draw(polys), draw(nonzero_polys))


@st.composite
def nonzero_ratfuncs(draw):
    return normalize(draw(nonzero_polys), draw(nonzero_polys))


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@settings(max_examples=60, deadline=None)
@given(nonzero_ratfuncs())
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_normalize_idempotent(n, d):
    r = normalize(n, d)
    assert normalize(r.num, r.den) == r
    assert r.den.monic() == r.den
    assert r.num.gcd(r.den).degree == 0


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs(), st.sampled_from(POINTS))
def test_specialize_is_a_homomorphism(f, g, a):
    try:
        fa, ga = specialize(f, a), specialize(g, a)
    except ValueError:
        return
    assert specialize(f * g, a) == fa * ga
    assert specialize(f + g, a) == fa + ga


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_polynomial_division(a, b):
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree
