from fractions import Fraction
from math import factorial

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from expchar.errors import (
    DistinctnessViolation,
    NotSplitOverRationals,
    SymbolicEvaluation,
    ZeroConstantTerm,
    ZeroFunction,
    ZeroScalar,
)
from expchar.exppoly import (
    FreeExpPoly,
    Symbol,
    apply_linear,
    char_poly,
    degree_freeform,
    evaluate,
    make_canonical,
    monoid_generator,
    operator_apply_values,
    phi_at_zero,
    recurrence_solve,
    recurrence_unroll,
    shift_apply,
)
from expchar.polynomial import PolynomialQ

from generators import new_rng, random_numeric_canonical, random_split_recurrence

P = PolynomialQ
T = P([0, 1])
WINDOW = range(-20, 21)


def eps(lam, k=0):
    return FreeExpPoly.basis(lam, k)


# -- construction ---------------------------------------------------------------


def test_make_canonical_examples():
    phi = make_canonical(6, [(1, 1)])
    assert phi.r == 6 and phi.terms == ((P([1]), Fraction(1)),)
    phi = make_canonical(4, [(-1, "a"), (-1, "b")])
    assert [lam for _, lam in phi.terms] == [Symbol("a"), Symbol("b")]
    phi = make_canonical(2, [(P([1]), 3), (P(), 5)])
    assert phi.terms == ((P([1]), Fraction(3)),)


def test_make_canonical_errors():
    with pytest.raises(DistinctnessViolation):
        make_canonical(2, [(1, 3), (1, -3)])
    with pytest.raises(DistinctnessViolation):
        make_canonical(1, [(1, "a"), (2, "a")])
    with pytest.raises(ZeroScalar):
        make_canonical(1, [(1, 0)])
    # r = 1 admits lam and -lam together
    assert len(make_canonical(1, [(1, 3), (1, -3)]).terms) == 2


# -- evaluation ------------------------------------------------------------------


def test_evaluate_examples():
    delta6 = make_canonical(6, [(1, 1)])
    assert evaluate(delta6, 6) == 6
    assert evaluate(delta6, 3) == 0
    assert evaluate(make_canonical(2, [(1, 3)]), 4) == 162
    assert evaluate(make_canonical(1, [(P([0, 0, 1]), 2)]), 3) == 72


def test_evaluate_symbolic_raises():
    with pytest.raises(SymbolicEvaluation):
        evaluate(make_canonical(2, [(1, "a")]), 2)


def test_phi_at_zero_examples():
    assert phi_at_zero(make_canonical(6, [(1, 1)])) == 6
    assert phi_at_zero(make_canonical(4, [(-1, "a"), (-1, "b")])) == -8
    assert phi_at_zero(make_canonical(2, [(1, "a"), (-1, "b")])) == 0


def test_support_in_multiples_of_r():
    rng = new_rng(11)
    for _ in range(40):
        phi = random_numeric_canonical(rng)
        for m in range(-15, 16):
            if m % phi.r:
                assert evaluate(phi, m) == 0


# -- characteristic polynomial ---------------------------------------------------


def roots_of_unity_poly(r):
    roots = [np.exp(2j * np.pi * k / r) for k in range(r)]
    coeffs = np.poly(roots)
    assert np.allclose(coeffs.imag, 0, atol=1e-9)
    return P([Fraction(round(c)) for c in coeffs.real[::-1]])


@pytest.mark.parametrize("r", [1, 2, 3, 4, 6])
def test_char_poly_of_delta(r):
    assert char_poly(make_canonical(r, [(1, 1)])) == roots_of_unity_poly(r)


def test_char_poly_examples():
    assert char_poly(make_canonical(1, [(P([0, 0, 1]), 2)])) == P.from_roots([2, 2, 2])
    phi = make_canonical(2, [(1, 3)])
    assert char_poly(phi) == P([-9, 0, 1])
    assert all(v == 0 for v in operator_apply_values(P([-9, 0, 1]), phi, WINDOW))


def test_char_poly_symbolic_raises():
    with pytest.raises(SymbolicEvaluation):
        char_poly(make_canonical(1, [(1, "a")]))


def maximal_proper_divisors(c):
    t = sympy.symbols("t")
    poly = sympy.Poly([sympy.Rational(x.numerator, x.denominator) for x in reversed(c.coeffs)], t, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, _ in factors:
        q = poly.quo(f).monic()
        out.append(P([Fraction(int(x.numerator), int(x.denominator)) for x in reversed(q.all_coeffs())]))
    return out


def test_annihilation_and_minimality():
    rng = new_rng(2024)
    for _ in range(25):
        phi = random_numeric_canonical(rng)
        chi = char_poly(phi)
        assert chi.is_monic()
        assert all(v == 0 for v in operator_apply_values(chi, phi, WINDOW))
        for c in maximal_proper_divisors(chi):
            assert any(v != 0 for v in operator_apply_values(c, phi, WINDOW))


def test_operator_identity_and_linear():
    phi = make_canonical(3, [(P([1, 1]), 2)])
    assert operator_apply_values(P([1]), phi, range(-6, 7)) == [phi(m) for m in range(-6, 7)]
    eps2 = make_canonical(1, [(1, 2)])
    assert operator_apply_values(P([-2, 1]), eps2, WINDOW) == [0] * len(WINDOW)


# -- shift action ----------------------------------------------------------------


@pytest.mark.parametrize("lam", [Fraction(2), Fraction(-1, 3), Fraction(5, 2)])
@pytest.mark.parametrize("k", [0, 1, 2, 4])
def test_shift_lemma(lam, k):
    lin = P([-lam, 1])
    assert shift_apply(lin ** (k + 1), eps(lam, k)).is_zero()
    assert shift_apply(lin**k, eps(lam, k)) == eps(lam, 0).scale(factorial(k) * lam**k)


def test_shift_linear_distinct_base():
    assert shift_apply(P([-1, 1]), eps(2)) == eps(2)
    assert apply_linear(1, eps(2)) == eps(2)


free_terms = st.dictionaries(
    st.tuples(st.sampled_from([Fraction(x) for x in (-3, -1, 1, 2, Fraction(1, 2))]), st.integers(0, 3)),
    st.fractions(min_value=-4, max_value=4, max_denominator=3),
    max_size=5,
)
small_poly = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), max_size=4).map(P)


@settings(max_examples=60)
@given(free_terms, small_poly)
def test_shift_apply_pointwise(terms, c):
    f = FreeExpPoly(terms)
    g = shift_apply(c, f)
    for m in range(-10, 11):
        assert g(m) == sum(cj * f(m + j) for j, cj in enumerate(c.coeffs))


def test_linear_independence():
    rng = new_rng(5)
    pool = [Fraction(x) for x in (-3, -2, -1, 1, 2, 3)] + [Fraction(1, 2), Fraction(-2, 3)]
    for _ in range(30):
        keys = list({(rng.choice(pool), rng.randint(0, 3)) for _ in range(rng.randint(1, 8))})
        rows = [
            [sympy.Rational(m) ** k * sympy.Rational(lam.numerator, lam.denominator) ** m for lam, k in keys]
            for m in range(len(keys) + 2)
        ]
        assert sympy.Matrix(rows).rank() == len(keys)


# -- degree ---------------------------------------------------------------------


def monoid_closure(gens, bound):
    seen, frontier = {0}, {0}
    while frontier:
        new = {x + g for x in frontier for g in gens if abs(x + g) <= bound} - seen
        seen |= new
        frontier = new
    return seen


@pytest.mark.parametrize("S, expected", [({6, -4}, 2), ({5, -5}, 5), ({0}, 0), ({9, -6, 15}, 3)])
def test_monoid_generator(S, expected):
    assert monoid_generator(S) == expected
    if expected:
        assert monoid_closure(S, 30) == {x for x in range(-30, 31) if x % expected == 0}


def test_degree_freeform_examples():
    assert degree_freeform(eps(1) + eps(-1)) == 2
    assert degree_freeform(eps(2)) == 1
    f = eps(3) + eps(-3)
    assert degree_freeform(f) == 2
    support = [m for m in range(-8, 9) if f(m) != 0]
    assert all(m % 2 == 0 for m in support)
    assert degree_freeform(eps(1) - eps(-1)) == 1
    with pytest.raises(ZeroFunction):
        degree_freeform(FreeExpPoly())


@settings(max_examples=60)
@given(free_terms)
def test_degree_matches_support(terms):
    f = FreeExpPoly(terms)
    if f.is_zero():
        return
    support = [m for m in range(-12, 13) if f(m) != 0]
    assert degree_freeform(f) == monoid_generator(support)


# -- recurrences -------------------------------------------------------------------


def test_unroll_examples():
    assert recurrence_unroll(P([2, -3, 1]), [0, 1], range(0, 6)) == [0, 1, 3, 7, 15, 31]
    assert recurrence_unroll(P([-1, 1]), [5], range(-3, 4)) == [5] * 7
    assert recurrence_unroll(P([-1, 0, 1]), [2, 0], range(-2, 5)) == [2, 0, 2, 0, 2, 0, 2]


def test_solve_examples():
    sol = recurrence_solve(P([2, -3, 1]), [0, 1])
    assert sol == eps(2) - eps(1)
    assert [sol(m) for m in range(-5, 11)] == recurrence_unroll(P([2, -3, 1]), [0, 1], range(-5, 11))
    sol = recurrence_solve(P.from_roots([2, 2]), [0, 2])
    assert sol == eps(2, 1)
    assert recurrence_unroll(P.from_roots([2, 2]), [0, 2], range(4)) == [0, 2, 8, 24]
    assert recurrence_solve(P([-3, 1]), [1]) == eps(3)


def test_recurrence_errors():
    with pytest.raises(NotSplitOverRationals) as info:
        recurrence_solve(P([1, 0, 1]) * P([-2, 1]), [0, 1, 2])
    assert info.value.factor == P([1, 0, 1])
    with pytest.raises(ZeroConstantTerm):
        recurrence_solve(P([0, -1, 1]), [1, 1])
    with pytest.raises(ZeroConstantTerm):
        recurrence_unroll(P([0, 1]), [1], range(3))
    with pytest.raises(ValueError):
        recurrence_unroll(P([1, 2]), [1], range(3))


def test_solve_roundtrip():
    rng = new_rng(77)
    for _ in range(20):
        c, _ = random_split_recurrence(rng)
        init = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(c.degree)]
        sol = recurrence_solve(c, init)
        window = range(-10, 21)
        assert [sol(m) for m in window] == recurrence_unroll(c, init, window)
        assert shift_apply(c, sol).is_zero()
