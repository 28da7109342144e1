from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from expchar.polynomial import PolynomialQ, poly_gcd, rational_roots, root_multiplicities

small = st.fractions(min_value=-6, max_value=6, max_denominator=3)
polys = st.lists(small, max_size=5).map(PolynomialQ)


def test_normalization():
    assert PolynomialQ([1, 2, 0, 0]).coeffs == (1, 2)
    assert PolynomialQ([0, 0]).is_zero()
    assert PolynomialQ().degree == -1


@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys, st.fractions(min_value=-3, max_value=3, max_denominator=2))
def test_ring_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert a.shift(2)(x) == a(x + 2)
    assert a.scale_variable(3)(x) == a(3 * x)
    assert a.substitute_power(2)(x) == a(x * x)


def test_render():
    assert PolynomialQ.from_roots([2, 2, 2]).render() == "t^3 - 6t^2 + 12t - 8"
    assert PolynomialQ([Fraction(-1, 2), 0, Fraction(3, 4)]).render("m") == "(3/4)m^2 - 1/2"
    assert PolynomialQ().render() == "0"
    assert PolynomialQ([0, -1]).render() == "-t"


def test_rational_roots():
    p = PolynomialQ.from_roots([Fraction(2, 3), Fraction(2, 3), -5, 1]) * PolynomialQ([1, 0, 1])
    assert rational_roots(p) == [-5, Fraction(2, 3), 1]
    mults, rest = root_multiplicities(p)
    assert mults == {Fraction(2, 3): 2, -5: 1, 1: 1}
    assert rest == PolynomialQ([1, 0, 1])


def test_rational_roots_with_zero_root():
    assert rational_roots(PolynomialQ([0, 0, -4, 1])) == [0, 4]


def test_gcd():
    a = PolynomialQ.from_roots([1, 2, 3])
    b = PolynomialQ.from_roots([2, 3, 4])
    assert poly_gcd(a, b) == PolynomialQ.from_roots([2, 3])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(PolynomialQ([1]), PolynomialQ())
