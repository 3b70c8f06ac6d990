from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals
from liecasimir.scalar_poly import (
    DIVERGENT,
    MultiPoly,
    RationalFunction,
    SingularFamily,
    UPoly,
    as_rational,
    ratfunc_limit_at_zero,
    ratfunc_matrix_inverse,
    upoly_gcd,
)

E = RationalFunction(UPoly([0, 1]))


def x(i, n=2):
    return MultiPoly.variable(n, i)


def test_add_cancels():
    assert (x(0) + x(1)) + (-x(0)) == x(1)


def test_mul_monomials():
    assert x(0) * x(1) == MultiPoly(2, {(1, 1): 1})


def test_difference_of_squares():
    one = MultiPoly.constant(2, 1)
    assert (x(0) + one) * (x(0) - one) == MultiPoly(2, {(2, 0): 1, (0, 0): -1})


def test_mismatched_variable_counts():
    with pytest.raises(ValueError):
        x(0, 2) + x(0, 3)


def test_no_zero_coefficients_stored():
    p = MultiPoly(2, {(1, 0): 0, (0, 1): Fraction(3, 2)})
    assert p.terms == {(0, 1): Fraction(3, 2)}
    assert (p - p).terms == {}


def test_as_rational_refuses_floats():
    assert as_rational("3/6") == Fraction(1, 2)
    for bad in (0.5, "0.5", "1e3", True):
        with pytest.raises((TypeError, ValueError)):
            as_rational(bad)


def test_divexact():
    a = x(0) * x(0) - x(1) * x(1)
    assert a.divexact(x(0) - x(1)) == x(0) + x(1)
    with pytest.raises(ArithmeticError):
        a.divexact(x(0) + MultiPoly.constant(2, 1) + x(1) * x(1))


def test_printing_is_grlex():
    p = MultiPoly(3, {(0, 0, 2): 1, (2, 0, 0): 1, (0, 1, 1): 4})
    assert p.to_string() == "x1^2 + 4*x2*x3 + x3^2"
    assert p.to_string(["H", "E", "F"]) == "H^2 + 4*E*F + F^2"


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), rationals, max_size=6
).map(lambda d: MultiPoly(3, d))


@given(polys, polys, st.tuples(rationals, rationals, rationals))
def test_arithmetic_agrees_with_evaluation(a, b, p):
    assert (a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p)
    assert (a - b).evaluate(p) == a.evaluate(p) - b.evaluate(p)
    assert (a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p)


@given(polys, polys)
def test_divexact_inverts_mul(a, b):
    if b:
        assert (a * b).divexact(b) == a


# -- Q(e) -------------------------------------------------------------------


def test_limit_examples():
    assert ratfunc_limit_at_zero(E**2) == 0
    assert ratfunc_limit_at_zero((3 * E + E**2) / E) == 3
    assert ratfunc_limit_at_zero(1 / E) is DIVERGENT


def test_limit_uses_reduced_form():
    # (e^2 + e) / (e^2) reduces to (e + 1)/e which diverges
    f = RationalFunction(UPoly([0, 1, 1]), UPoly([0, 0, 1]))
    assert ratfunc_limit_at_zero(f) is DIVERGENT
    g = RationalFunction(UPoly([0, 2, 1]), UPoly([0, 1]))
    assert ratfunc_limit_at_zero(g) == 2


def test_normalization():
    f = RationalFunction(UPoly([0, 2]), UPoly([0, 4]))  # 2e / 4e
    assert f.num == UPoly([Fraction(1, 2)]) and f.den == UPoly([1])
    h = RationalFunction(UPoly([1]), UPoly([3, 3]))  # 1 / (3 + 3e)
    assert h.den.lead() == 1


upolys = st.lists(st.integers(-5, 5), min_size=1, max_size=4).map(UPoly)


@given(upolys, upolys)
def test_ratfunc_normalized_invariants(a, b):
    if b.is_zero():
        return
    f = RationalFunction(a, b)
    assert f.den.lead() == 1
    assert upoly_gcd(f.num, f.den) == UPoly([1]) or f.num.is_zero()
    again = RationalFunction(f.num, f.den)
    assert again == f


def test_matrix_inverse_examples():
    one, zero = RationalFunction(1), RationalFunction(0)
    assert ratfunc_matrix_inverse([[one, zero], [zero, one]]) == [[one, zero], [zero, one]]
    inv = ratfunc_matrix_inverse([[E, zero, zero], [zero, E, zero], [zero, zero, E**2]])
    assert inv[0][0] == 1 / E and inv[1][1] == 1 / E and inv[2][2] == E ** -2
    assert inv[0][1] == 0
    assert ratfunc_matrix_inverse([[one, E], [zero, one]]) == [[one, -E], [zero, one]]


def test_matrix_inverse_singular():
    with pytest.raises(SingularFamily):
        ratfunc_matrix_inverse([[E, E**2], [1, E]])


ratfuncs = st.tuples(upolys, upolys).filter(lambda t: not t[1].is_zero()).map(
    lambda t: RationalFunction(*t)
)


@settings(max_examples=30, deadline=None)
@given(st.lists(ratfuncs, min_size=9, max_size=9))
def test_matrix_inverse_roundtrip(entries):
    g = [entries[0:3], entries[3:6], entries[6:9]]
    try:
        inv = ratfunc_matrix_inverse(g)
    except SingularFamily:
        return
    for i in range(3):
        for j in range(3):
            s = RationalFunction(0)
            for k in range(3):
                s = s + g[i][k] * inv[k][j]
            assert s == (1 if i == j else 0)
