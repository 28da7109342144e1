"""Characters of the level-zero modules attached to exponential polynomials.

The character is recorded as a :class:`CharacterArray`: entry ``(k, n)`` is
the dimension of the weight space at ``phi(0)/2 * alpha - k * alpha + n * delta``.
The weights themselves stay formal; only ``phi(0)`` and the cell
coordinates are stored. Columns are residues ``n mod r`` since every row
is r-periodic in n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from expchar.errors import NegativeEntry, NonIntegerEntry, ZeroFunction, ZeroPolynomial
from expchar.exppoly import CanonicalExpPoly, phi_at_zero
from expchar.numbers import divisors, ramanujan_sum
from expchar.polynomial import PolynomialQ
from expchar.semiinvariants import tensor_component_series
from expchar.series import (
    TruncatedSeries,
    expand_rational,
    series_add,
    series_mul,
    series_pow,
    series_substitute_power,
)


@dataclass(frozen=True)
class CharacterArray:
    phi0: Fraction
    r: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def K(self) -> int:
        return len(self.rows) - 1

    def entry(self, k: int, n: int) -> int:
        """Multiplicity at (k, n) for any integer n."""
        if k > self.K:
            raise IndexError(f"row {k} is beyond the cutoff {self.K}")
        return self.rows[k][n % self.r]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]


@dataclass(frozen=True)
class FSeries:
    """prod_{a_i in Z+} (1 - Z^(a_i + 1)) / (1 - Z)^M as a truncated series."""

    series: TruncatedSeries
    numerator_exponents: tuple[int, ...]
    M: int


def nonnegative_integer_value(a: PolynomialQ) -> int | None:
    """The value of ``a`` if it is a constant nonnegative integer, else None."""
    if a.is_constant():
        c = a[0]
        if c.denominator == 1 and c >= 0:
            return int(c)
    return None


def truncated_current_char(a: PolynomialQ, K: int) -> TruncatedSeries:
    """Graded character of the highest-weight module attached to ``a * eps(lam)``.

    ``(1 - X^(a+1)) / (1 - X)`` when ``a`` is a constant in Z+, otherwise
    ``1 / (1 - X)^(deg a + 1)``.
    """
    if a.is_zero():
        raise ZeroPolynomial("coefficient polynomial must be nonzero")
    value = nonnegative_integer_value(a)
    if value is not None:
        return expand_rational([value + 1], 1, K)
    return expand_rational([], a.degree + 1, K)


def f_series(phi: CanonicalExpPoly, K: int) -> FSeries:
    exponents = []
    M = 0
    for a, _ in phi.terms:
        M += a.degree + 1
        value = nonnegative_integer_value(a)
        if value is not None:
            exponents.append(value + 1)
    exponents = tuple(sorted(exponents))
    return FSeries(expand_rational(exponents, M, K), exponents, M)


def _check_entries(columns: list[TruncatedSeries]) -> list[list[int]]:
    out = []
    for n, col in enumerate(columns):
        ints = []
        for k, c in enumerate(col.coeffs):
            if c.denominator != 1:
                raise NonIntegerEntry(f"entry (k={k}, n={n}) = {c} is not an integer")
            if c < 0:
                raise NegativeEntry(f"entry (k={k}, n={n}) = {c} is negative")
            ints.append(int(c))
        out.append(ints)
    return out


def _assemble(phi: CanonicalExpPoly, columns: list[TruncatedSeries]) -> CharacterArray:
    cols = _check_entries(columns)
    K = len(cols[0]) - 1
    rows = tuple(tuple(cols[n][k] for n in range(phi.r)) for k in range(K + 1))
    return CharacterArray(phi_at_zero(phi), phi.r, rows)


def character_array(phi: CanonicalExpPoly, K: int) -> CharacterArray:
    """Weight multiplicities for rows k = 0..K from the closed character formula.

    Column n holds the coefficients of
    ``(1/r) * sum_{d | r} c_d(n) * F(X^d)^(r/d)``.
    """
    if phi.is_zero():
        raise ZeroFunction("the character is only defined for nonzero phi")
    r = phi.r
    F = f_series(phi, K).series
    powers = {d: series_pow(series_substitute_power(F, d), r // d) for d in divisors(r)}
    columns = []
    for n in range(r):
        acc = TruncatedSeries.constant(0, K)
        for d, p in powers.items():
            acc = series_add(acc, p.scale(ramanujan_sum(d, n)))
        columns.append(acc.scale(Fraction(1, r)))
    return _assemble(phi, columns)


def character_array_via_semiinvariants(phi: CanonicalExpPoly, K: int) -> CharacterArray:
    """Same array, read off as eigenspace series of the rotation on the r-th tensor power of F."""
    if phi.is_zero():
        raise ZeroFunction("the character is only defined for nonzero phi")
    F = TruncatedSeries([1], K)
    for a, _ in phi.terms:
        F = series_mul(F, truncated_current_char(a, K))
    columns = [tensor_component_series(F, phi.r, n) for n in range(phi.r)]
    return _assemble(phi, columns)


def weight_of_cell(arr: CharacterArray, k: int, n: int) -> tuple[Fraction, int]:
    """(coefficient of alpha, coefficient of delta) of the weight at cell (k, n)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return arr.phi0 / 2 - k, n
