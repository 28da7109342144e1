"""Exponential-polynomial functions on the integers.

Two representations live here:

* :class:`FreeExpPoly` -- a finite combination of the basis functions
  ``m -> m^k * lam^m`` with rational ``lam != 0``.
* :class:`CanonicalExpPoly` -- the normal form ``delta_r * sum_i a_i(m) lam_i^m``
  where ``delta_r(m)`` is ``r`` on multiples of ``r`` and 0 elsewhere. Bases
  may be rational or symbolic; symbolic bases only support operations that
  never look at the value of ``lam``.

``delta_r`` is never expanded into roots of unity, so all arithmetic stays
over the rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence, Union

from expchar.errors import (
    DistinctnessViolation,
    NotSplitOverRationals,
    SingularSystem,
    SymbolicEvaluation,
    ZeroConstantTerm,
    ZeroFunction,
    ZeroScalar,
)
from expchar.polynomial import PolynomialQ, root_multiplicities


@dataclass(frozen=True, order=True)
class Symbol:
    """A transcendental exponential base, e.g. the ``a`` in ``exp(a)``."""

    name: str

    def __str__(self) -> str:
        return self.name


Base = Union[Fraction, Symbol]


def as_base(value) -> Base:
    if isinstance(value, Symbol):
        return value
    if isinstance(value, str):
        try:
            value = Fraction(value)
        except ValueError:
            return Symbol(value)
    value = Fraction(value)
    if value == 0:
        raise ZeroScalar("exponential base must be nonzero")
    return value


def _base_key(b: Base):
    # numeric bases sort before symbols
    return (1, b.name, 0) if isinstance(b, Symbol) else (0, "", b)


# -- free form ---------------------------------------------------------------


class FreeExpPoly:
    """Finite linear combination of ``eps(lam, k)(m) = m^k lam^m``.

    Stored as ``{(lam, k): coefficient}`` with zero coefficients dropped.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[Fraction, int], Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for (lam, k), c in items:
            lam, c = Fraction(lam), Fraction(c)
            if lam == 0:
                raise ZeroScalar("exponential base must be nonzero")
            if k < 0:
                raise ValueError("basis exponent k must be nonnegative")
            key = (lam, int(k))
            total = clean.get(key, Fraction(0)) + c
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def basis(cls, lam, k: int = 0) -> FreeExpPoly:
        return cls({(lam, k): 1})

    @classmethod
    def from_poly_exp(cls, a: PolynomialQ, lam) -> FreeExpPoly:
        """The function m -> a(m) lam^m."""
        return cls({(lam, k): c for k, c in enumerate(a.coeffs)})

    @property
    def terms(self) -> dict[tuple[Fraction, int], Fraction]:
        return dict(self._terms)

    def bases(self) -> list[Fraction]:
        return sorted({lam for lam, _ in self._terms})

    def coefficient_polynomial(self, lam) -> PolynomialQ:
        lam = Fraction(lam)
        ks = [k for l, k in self._terms if l == lam]
        if not ks:
            return PolynomialQ()
        return PolynomialQ(self._terms.get((lam, k), 0) for k in range(max(ks) + 1))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeExpPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: FreeExpPoly) -> FreeExpPoly:
        merged = list(self._terms.items()) + list(other._terms.items())
        return FreeExpPoly(merged)

    def __neg__(self) -> FreeExpPoly:
        return self.scale(-1)

    def __sub__(self, other: FreeExpPoly) -> FreeExpPoly:
        return self + (-other)

    def scale(self, c) -> FreeExpPoly:
        c = Fraction(c)
        return FreeExpPoly({key: c * v for key, v in self._terms.items()})

    def evaluate(self, m: int) -> Fraction:
        total = Fraction(0)
        for (lam, k), c in self._terms.items():
            total += c * Fraction(m) ** k * lam**m
        return total

    __call__ = evaluate

    def __repr__(self) -> str:
        inner = ", ".join(f"({l}, {k}): {c}" for (l, k), c in self._terms.items())
        return f"FreeExpPoly({{{inner}}})"


def apply_linear(mu, f: FreeExpPoly) -> FreeExpPoly:
    """Image of ``f`` under the shift operator ``t - mu``.

    Uses (t - mu) eps(lam, k) = (lam - mu) eps(lam, k) + lam * sum_{j<k} C(k, j) eps(lam, j).
    """
    mu = Fraction(mu)
    out: list[tuple[tuple[Fraction, int], Fraction]] = []
    for (lam, k), c in f.terms.items():
        out.append(((lam, k), c * (lam - mu)))
        for j in range(k):
            out.append(((lam, j), c * lam * comb(k, j)))
    return FreeExpPoly(out)


def shift_apply(c: PolynomialQ, f: FreeExpPoly) -> FreeExpPoly:
    """Exact image of ``f`` under ``c(t)`` where ``t`` shifts m -> m + 1."""
    acc = FreeExpPoly()
    for coeff in reversed(c.coeffs):
        acc = apply_linear(0, acc) + f.scale(coeff)
    return acc


# -- canonical form ----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalExpPoly:
    """``delta_r * sum_i a_i * eps(lam_i)`` with ``lam_i^r`` pairwise distinct."""

    r: int
    terms: tuple[tuple[PolynomialQ, Base], ...]

    def is_numeric(self) -> bool:
        return all(not isinstance(lam, Symbol) for _, lam in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _require_numeric(self, what: str) -> None:
        if not self.is_numeric():
            names = ", ".join(str(l) for _, l in self.terms if isinstance(l, Symbol))
            raise SymbolicEvaluation(f"{what} needs numeric bases; symbolic: {names}")

    def evaluate(self, m: int) -> Fraction:
        return evaluate(self, m)

    __call__ = evaluate

    def __str__(self) -> str:
        parts = []
        for a, lam in self.terms:
            parts.append(f"({a.render('m')})*exp({lam})")
        return f"delta({self.r})*({' + '.join(parts) or '0'})"


def make_canonical(r: int, terms: Iterable[tuple]) -> CanonicalExpPoly:
    """Validate and build ``delta_r * sum a_i eps(lam_i)``.

    Zero coefficient polynomials are dropped. Numeric bases must have
    distinct ``r``-th powers; symbolic bases must have distinct names.

    >>> make_canonical(2, [(PolynomialQ([1]), 3), (PolynomialQ(), 5)]).terms
    ((PolynomialQ(coeffs=(Fraction(1, 1),)), Fraction(3, 1)),)
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    kept: list[tuple[PolynomialQ, Base]] = []
    for a, lam in terms:
        if not isinstance(a, PolynomialQ):
            a = PolynomialQ.constant(a)
        lam = as_base(lam)
        if a.is_zero():
            continue
        kept.append((a, lam))
    powers: dict[Fraction, Base] = {}
    names: set[str] = set()
    for _, lam in kept:
        if isinstance(lam, Symbol):
            if lam.name in names:
                raise DistinctnessViolation(f"symbolic base {lam} appears twice")
            names.add(lam.name)
        else:
            p = lam**r
            if p in powers:
                raise DistinctnessViolation(
                    f"bases {powers[p]} and {lam} have equal powers for r = {r} ({p})"
                )
            powers[p] = lam
    return CanonicalExpPoly(r, tuple(kept))


def evaluate(phi: CanonicalExpPoly, m: int) -> Fraction:
    phi._require_numeric("evaluation")
    if m % phi.r:
        return Fraction(0)
    total = Fraction(0)
    for a, lam in phi.terms:
        total += a(Fraction(m)) * lam**m
    return phi.r * total


def phi_at_zero(phi: CanonicalExpPoly) -> Fraction:
    """Value at m = 0; well defined for symbolic bases since lam^0 = 1."""
    return phi.r * sum((a[0] for a, _ in phi.terms), Fraction(0))


def char_poly(phi: CanonicalExpPoly) -> PolynomialQ:
    """Minimal monic annihilating polynomial of ``phi``.

    Each orbit ``{zeta * lam_i : zeta^r = 1}`` contributes the rational
    factor ``(t^r - lam_i^r)^(deg a_i + 1)``.
    """
    phi._require_numeric("char_poly")
    result = PolynomialQ([1])
    for a, lam in phi.terms:
        factor = PolynomialQ.monomial(phi.r) - lam**phi.r
        result = result * factor ** (a.degree + 1)
    return result


def operator_apply_values(c: PolynomialQ, phi, window: Iterable[int]) -> list[Fraction]:
    """Values of ``(c . phi)(m) = sum_j c_j phi(m + j)`` for ``m`` in ``window``."""
    if isinstance(phi, CanonicalExpPoly):
        phi._require_numeric("operator application")
    window = list(window)
    if not window or c.is_zero():
        return [Fraction(0)] * len(window)
    lo, hi = min(window), max(window) + c.degree
    values = [phi(m) for m in range(lo, hi + 1)]
    # one integer dot product per point over a shared denominator
    den_c = lcm(*(x.denominator for x in c.coeffs))
    den_v = lcm(*(v.denominator for v in values))
    cs = [(j, int(cj * den_c)) for j, cj in enumerate(c.coeffs) if cj]
    vs = [int(v * den_v) for v in values]
    scale = den_c * den_v
    return [Fraction(sum(cj * vs[m - lo + j] for j, cj in cs), scale) for m in window]


def monoid_generator(elements: Iterable[int]) -> int:
    """gcd of the absolute values; the r with <S> = rZ when S has both signs."""
    g = 0
    for x in elements:
        g = gcd(g, x)
    return g


def degree_freeform(f: FreeExpPoly) -> int:
    """Degree (1 or 2) of a nonzero free-form function with rational bases.

    Over the rationals the only roots of unity are +1 and -1, so the
    support lies in 2Z exactly when the coefficient polynomials at lam and
    -lam agree for every lam.
    """
    if f.is_zero():
        raise ZeroFunction("degree of the zero function is undefined")
    for lam in f.bases():
        if f.coefficient_polynomial(lam) != f.coefficient_polynomial(-lam):
            return 1
    return 2


# -- recurrences ---------------------------------------------------------------


def _check_recurrence(c: PolynomialQ) -> None:
    if c.degree < 1 or not c.is_monic():
        raise ValueError(f"recurrence polynomial must be monic of degree >= 1: {c}")
    if c[0] == 0:
        raise ZeroConstantTerm(f"constant term of {c} is zero")


def recurrence_unroll(c: PolynomialQ, initial: Sequence, window: Iterable[int]) -> list[Fraction]:
    """Values of the sequence with c . phi = 0 and phi(0..q-1) = initial."""
    _check_recurrence(c)
    q = c.degree
    if len(initial) != q:
        raise ValueError(f"need {q} initial values, got {len(initial)}")
    window = list(window)
    values = {m: Fraction(v) for m, v in enumerate(initial)}
    if window:
        lo, hi = min(window), max(window)
        for m in range(q, hi + 1):
            values[m] = -sum(c[j] * values[m - q + j] for j in range(q))
        for m in range(-1, lo - 1, -1):
            values[m] = -sum(c[j] * values[m + j] for j in range(1, q + 1)) / c[0]
    return [values[m] for m in window]


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise SingularSystem("basis evaluation matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def recurrence_solve(c: PolynomialQ, initial: Sequence) -> FreeExpPoly:
    """Closed form of the recurrence solution as a :class:`FreeExpPoly`.

    The solution space is spanned by eps(lam, k) for each root lam of c and
    k below its multiplicity; the coefficients come from matching the
    initial values.
    """
    _check_recurrence(c)
    q = c.degree
    if len(initial) != q:
        raise ValueError(f"need {q} initial values, got {len(initial)}")
    mults, rest = root_multiplicities(c)
    if rest.degree > 0:
        raise NotSplitOverRationals(rest)
    basis = [(lam, k) for lam, mult in sorted(mults.items()) for k in range(mult)]
    matrix = [
        [Fraction(m) ** k * lam**m for lam, k in basis]
        for m in range(q)
    ]
    coeffs = _solve_exact(matrix, [Fraction(v) for v in initial])
    return FreeExpPoly({key: v for key, v in zip(basis, coeffs)})
