"""Dense univariate polynomials over the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from expchar.numbers import divisors


@dataclass(frozen=True)
class PolynomialQ:
    """Polynomial with ``Fraction`` coefficients, constant term first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def constant(cls, c) -> PolynomialQ:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> PolynomialQ:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> PolynomialQ:
        p = cls([1])
        for a in roots:
            p = p * cls([-Fraction(a), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> PolynomialQ:
        if isinstance(other, PolynomialQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolynomialQ([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return PolynomialQ(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> PolynomialQ:
        return PolynomialQ(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return PolynomialQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolynomialQ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolynomialQ:
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = PolynomialQ([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: PolynomialQ) -> tuple[PolynomialQ, PolynomialQ]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return PolynomialQ(quot), PolynomialQ(rem[:dq])

    def __floordiv__(self, other: PolynomialQ) -> PolynomialQ:
        return divmod(self, other)[0]

    def __mod__(self, other: PolynomialQ) -> PolynomialQ:
        return divmod(self, other)[1]

    def monic(self) -> PolynomialQ:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self * (1 / self.leading())

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def scale_variable(self, s) -> PolynomialQ:
        """p(s*t)."""
        s = Fraction(s)
        return PolynomialQ(c * s**k for k, c in enumerate(self.coeffs))

    def shift(self, a) -> PolynomialQ:
        """p(t + a), by Horner composition."""
        lin = PolynomialQ([a, 1])
        acc = PolynomialQ()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def substitute_power(self, r: int) -> PolynomialQ:
        """p(t^r)."""
        out = [Fraction(0)] * (r * self.degree + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[r * k] = c
        return PolynomialQ(out)

    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono and mag.denominator != 1:
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def poly_gcd(a: PolynomialQ, b: PolynomialQ) -> PolynomialQ:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def rational_roots(p: PolynomialQ) -> list[Fraction]:
    """Distinct rational roots of ``p`` by the rational root test."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every root")
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    roots: list[Fraction] = []
    # strip the root 0 first so the constant term is nonzero
    low = next(i for i, c in enumerate(ints) if c)
    if low:
        roots.append(Fraction(0))
        ints = ints[low:]
    if len(ints) == 1:
        return roots
    q = PolynomialQ(ints)
    for num in divisors(abs(ints[0])):
        for den_ in divisors(abs(ints[-1])):
            for cand in (Fraction(num, den_), Fraction(-num, den_)):
                if cand not in roots and q(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def root_multiplicities(p: PolynomialQ) -> tuple[dict[Fraction, int], PolynomialQ]:
    """Split off every rational linear factor of ``p``.

    Returns ``({root: multiplicity}, cofactor)`` where the cofactor has no
    rational roots (it is the constant leading coefficient when ``p`` splits).
    """
    mults: dict[Fraction, int] = {}
    rest = p
    for a in rational_roots(p):
        lin = PolynomialQ([-a, 1])
        while True:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
            mults[a] = mults.get(a, 0) + 1
    return mults, rest
