"""Integer number theory: divisors, Moebius, totient and Ramanujan sums.

Everything here is exact integer arithmetic; factorization is by trial
division, which is plenty for the sizes the character formula needs.
"""
from __future__ import annotations

from math import gcd


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}``."""
    _check_positive(n)
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(r: int) -> list[int]:
    """Positive divisors of ``r`` in ascending order.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    _check_positive(r)
    divs = [1]
    for p, e in factorize(r).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def moebius(d: int) -> int:
    factors = factorize(d)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(d: int) -> int:
    result = d
    for p in factorize(d):
        result = result // p * (p - 1)
    return result


def ramanujan_sum(d: int, n: int) -> int:
    """Ramanujan sum c_d(n) through the totient/Moebius closed form.

    ``gcd(d, 0)`` is taken to be ``d``, so ``c_d(0) = totient(d)``.

    >>> ramanujan_sum(4, 2)
    -2
    """
    _check_positive(d)
    g = gcd(d, n) if n != 0 else d
    reduced = d // g
    num = totient(d) * moebius(reduced)
    den = totient(reduced)
    q, rem = divmod(num, den)
    assert rem == 0, f"c_{d}({n}) is not an integer"
    return q


def ramanujan_sum_divisor_form(d: int, n: int) -> int:
    """c_d(n) as the sum of e * mu(d/e) over e dividing gcd(d, n)."""
    _check_positive(d)
    g = gcd(d, n) if n != 0 else d
    return sum(e * moebius(d // e) for e in divisors(g))
