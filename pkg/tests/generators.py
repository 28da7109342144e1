"""Seeded random inputs shared by the property and acceptance tests."""
import random
from fractions import Fraction

from expchar.exppoly import Symbol, make_canonical
from expchar.polynomial import PolynomialQ

RATIONAL_BASES = [Fraction(p, q) for p in range(-4, 5) if p for q in (1, 2, 3)]


def random_rational(rng, lo=-4, hi=4, dens=(1, 1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_polynomial(rng, max_degree):
    deg = rng.randint(0, max_degree)
    coeffs = [random_rational(rng) for _ in range(deg)]
    lead = Fraction(0)
    while lead == 0:
        lead = random_rational(rng)
    return PolynomialQ(coeffs + [lead])


def random_numeric_canonical(rng, max_r=4, max_terms=3, max_degree=2):
    r = rng.randint(1, max_r)
    terms, powers = [], set()
    for _ in range(rng.randint(1, max_terms)):
        lam = rng.choice(RATIONAL_BASES)
        if lam**r in powers:
            continue
        powers.add(lam**r)
        terms.append((random_polynomial(rng, max_degree), lam))
    return make_canonical(r, terms)


def random_coefficient(rng, max_degree):
    kind = rng.random()
    if kind < 0.35:
        return PolynomialQ([rng.randint(1, 4)])
    if kind < 0.55:
        return PolynomialQ([rng.choice([-1, -2, Fraction(1, 2), Fraction(-3, 2)])])
    return random_polynomial(rng, max_degree)


def random_character_input(rng, max_r=6, max_terms=3, max_degree=2):
    """Canonical input whose bases are symbols; only the a_i matter for characters."""
    r = rng.randint(1, max_r)
    n = rng.randint(1, max_terms)
    return make_canonical(
        r, [(random_coefficient(rng, max_degree), Symbol(f"s{i}")) for i in range(n)]
    )


def random_split_recurrence(rng, max_degree=5):
    """Monic polynomial with nonzero rational roots, as (poly, roots)."""
    q = rng.randint(1, max_degree)
    pool = [Fraction(p, d) for p in range(-3, 4) if p for d in (1, 2)]
    roots = [rng.choice(pool) for _ in range(q)]
    return PolynomialQ.from_roots(roots), roots


def new_rng(seed):
    return random.Random(seed)
