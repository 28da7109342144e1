"""Poincare series of eigenspaces of the cyclic rotation on tensor powers.

For a graded space V with Poincare series P, the rotation
``v1 (x) ... (x) vr -> vr (x) v1 (x) ... (x) v(r-1)`` acts on ``V^r``; its
eigenspace for ``w^n`` (``w`` a primitive r-th root of unity) has series

    (1/r) * sum_{d | r} c_d(n) * P(X^d)^(r/d).

The closed forms are paired with a brute-force oracle that enumerates basis
tuples and partitions them into rotation orbits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from expchar.errors import (
    EnumerationTooLarge,
    NegativeEntry,
    NonIntegerResult,
    NotADivisor,
)
from expchar.numbers import divisors, moebius, ramanujan_sum
from expchar.series import (
    TruncatedSeries,
    series_add,
    series_pow,
    series_substitute_power,
)

ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of a finite-dimensional graded space, ``dims[k] = dim V_k``.

    Degrees past the end of ``dims`` are zero-dimensional.
    """

    dims: tuple[int, ...]

    def __init__(self, dims):
        dims = tuple(int(x) for x in dims)
        if any(x < 0 for x in dims):
            raise ValueError(f"dimensions must be nonnegative: {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def cutoff(self) -> int:
        return len(self.dims) - 1

    def poincare_series(self, cutoff: int | None = None) -> TruncatedSeries:
        return TruncatedSeries(self.dims, self.cutoff if cutoff is None else cutoff)


@dataclass(frozen=True)
class OrbitProfile:
    """Generating functions g_{r,d} of tuples by exact rotation order d."""

    r: int
    by_order: dict

    def total(self) -> TruncatedSeries:
        series = list(self.by_order.values())
        acc = series[0]
        for s in series[1:]:
            acc = series_add(acc, s)
        return acc


def _check_counting_series(P: TruncatedSeries) -> None:
    if any(c.denominator != 1 or c < 0 for c in P.coeffs):
        raise ValueError("Poincare series must have nonnegative integer coefficients")


def _as_counts(s: TruncatedSeries, what: str) -> TruncatedSeries:
    for k, c in enumerate(s.coeffs):
        if c.denominator != 1:
            raise NonIntegerResult(f"{what}: coefficient {c} of X^{k} is not an integer")
        if c < 0:
            raise NegativeEntry(f"{what}: coefficient {c} of X^{k} is negative")
    return s


def tensor_component_series(P: TruncatedSeries, r: int, n: int) -> TruncatedSeries:
    """Poincare series of the ``w^n`` eigenspace of the rotation on ``V^r``."""
    _check_counting_series(P)
    acc = TruncatedSeries.constant(0, P.cutoff)
    for d in divisors(r):
        c = ramanujan_sum(d, n)
        if c:
            acc = series_add(acc, series_pow(series_substitute_power(P, d), r // d).scale(c))
    return _as_counts(acc.scale(Fraction(1, r)), f"component (r={r}, n={n})")


def order_gen_primitive(P: TruncatedSeries, d: int) -> TruncatedSeries:
    """g_{d,d}: tuples in V^d whose rotation orbit has the full size d."""
    _check_counting_series(P)
    acc = TruncatedSeries.constant(0, P.cutoff)
    for e in divisors(d):
        mu = moebius(e)
        if mu:
            acc = series_add(acc, series_pow(series_substitute_power(P, e), d // e).scale(mu))
    return _as_counts(acc, f"g_({d},{d})")


def order_gen(P: TruncatedSeries, r: int, d: int) -> TruncatedSeries:
    """g_{r,d}(X) = g_{d,d}(X^(r/d))."""
    if d < 1 or r % d:
        raise NotADivisor(f"{d} does not divide {r}")
    return series_substitute_power(order_gen_primitive(P, d), r // d)


# -- brute-force oracle ---------------------------------------------------------


def _basis(dims: tuple[int, ...], kmax: int) -> list[tuple[int, int]]:
    return [(k, s) for k, dim in enumerate(dims[: kmax + 1]) for s in range(1, dim + 1)]


def _tuples(basis, r: int, kmax: int):
    """All r-tuples over ``basis`` with total degree at most ``kmax``."""
    out: list[tuple] = []
    prefix: list = []

    def extend(depth: int, budget: int) -> None:
        if depth == r:
            out.append(tuple(prefix))
            return
        for b in basis:
            if b[0] <= budget:
                prefix.append(b)
                extend(depth + 1, budget - b[0])
                prefix.pop()

    extend(0, kmax)
    return out


def _rotate(t: tuple) -> tuple:
    # tau_r: (x1, ..., xr) -> (xr, x1, ..., x(r-1))
    return t[-1:] + t[:-1]


def _order(t: tuple) -> int:
    u = _rotate(t)
    d = 1
    while u != t:
        u = _rotate(u)
        d += 1
    return d


def _is_canonical(t: tuple) -> bool:
    u = t
    for _ in range(len(t) - 1):
        u = _rotate(u)
        if u < t:
            return False
    return True


def _check_size(dims: tuple[int, ...], r: int, kmax: int) -> None:
    size = len(_basis(dims, kmax)) ** r
    if size > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"{size} tuples exceed the limit {ENUMERATION_LIMIT}")


@lru_cache(maxsize=512)
def _orbit_sizes(dims: tuple[int, ...], r: int, kmax: int) -> tuple[dict[int, int], ...]:
    """For each degree k, ``{orbit size: number of orbits}`` via canonical reps."""
    by_degree: list[dict[int, int]] = [{} for _ in range(kmax + 1)]
    for t in _tuples(_basis(dims, kmax), r, kmax):
        if _is_canonical(t):
            k = sum(b[0] for b in t)
            size = _order(t)
            by_degree[k][size] = by_degree[k].get(size, 0) + 1
    return tuple(by_degree)


def brute_force_component(V: GradedDims, r: int, n: int, kmax: int) -> TruncatedSeries:
    """Eigenspace dimensions by counting orbits whose size is a multiple of r/gcd(r, n).

    An orbit of size s spans a copy of the regular representation of Z/s,
    which contains the eigenvalue w^n exactly when the order of w^n divides s.
    """
    _check_size(V.dims, r, kmax)
    need = r // gcd(r, n)
    counts = [
        sum(num for size, num in sizes.items() if size % need == 0)
        for sizes in _orbit_sizes(V.dims, r, kmax)
    ]
    return TruncatedSeries(counts)


def brute_force_order_counts(V: GradedDims, r: int, kmax: int) -> OrbitProfile:
    """N_{r,d,k} = number of tuples of total degree k and exact rotation order d."""
    _check_size(V.dims, r, kmax)
    table = {d: [0] * (kmax + 1) for d in divisors(r)}
    for t in _tuples(_basis(V.dims, kmax), r, kmax):
        table[_order(t)][sum(b[0] for b in t)] += 1
    return OrbitProfile(r, {d: TruncatedSeries(row) for d, row in table.items()})
