"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``sum coeffs[k] X^k`` known up to and including ``X^cutoff``.

    Binary operations between series of different cutoffs truncate to the
    smaller one.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, cutoff: int | None = None):
        values = [Fraction(c) for c in coeffs]
        if cutoff is not None:
            if cutoff < 0:
                raise ValueError("cutoff must be nonnegative")
            values = values[: cutoff + 1]
            values += [Fraction(0)] * (cutoff + 1 - len(values))
        if not values:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def constant(cls, value, cutoff: int) -> TruncatedSeries:
        return cls([value], cutoff)

    @classmethod
    def geometric(cls, cutoff: int) -> TruncatedSeries:
        """1/(1 - X)."""
        return cls([1] * (cutoff + 1))

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, cutoff: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, min(cutoff, self.cutoff))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other.scale(-1))

    def __neg__(self) -> TruncatedSeries:
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        return series_pow(self, e)

    def scale(self, c) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries([c * a for a in self.coeffs])

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(X^{self.cutoff + 1})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    k = min(a.cutoff, b.cutoff)
    return TruncatedSeries([a[i] + b[i] for i in range(k + 1)])


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    k = min(a.cutoff, b.cutoff)
    out = [Fraction(0)] * (k + 1)
    for i in range(k + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(k + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(out)


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = TruncatedSeries.constant(1, a.cutoff)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_substitute_power(a: TruncatedSeries, d: int) -> TruncatedSeries:
    """Replace X by X^d, keeping the cutoff."""
    if d < 1:
        raise ValueError("substitution power must be positive")
    out = [Fraction(0)] * (a.cutoff + 1)
    for k in range(a.cutoff // d + 1):
        out[d * k] = a[k]
    return TruncatedSeries(out)


def expand_rational(numerator_exponents: Sequence[int], denominator_power: int,
                    cutoff: int) -> TruncatedSeries:
    """Series of prod_j (1 - X^{b_j}) / (1 - X)^M up to X^cutoff."""
    m = denominator_power
    if m < 0:
        raise ValueError("denominator power must be nonnegative")
    if m == 0:
        denom = [1] + [0] * cutoff
    else:
        denom = [comb(k + m - 1, m - 1) for k in range(cutoff + 1)]
    coeffs = [Fraction(c) for c in denom]
    for b in numerator_exponents:
        if b < 1:
            raise ValueError("numerator exponents must be positive")
        # multiply in place by (1 - X^b), highest degree first
        for k in range(cutoff, b - 1, -1):
            coeffs[k] -= coeffs[k - b]
    return TruncatedSeries(coeffs)
