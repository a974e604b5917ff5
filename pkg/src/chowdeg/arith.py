"""Exact integer helpers: generalized binomials and p-adic valuations.

Three routes to the valuation of a binomial coefficient are provided:
repeated division of the exact integer (:func:`vp`), Kummer's carry count
(:func:`vp_binomial_kummer`) and Legendre's factorial formula
(:func:`vp_binomial_legendre`).
"""
from __future__ import annotations

import enum
import functools
import math
from typing import Union


class Infinity(enum.Enum):
    """The valuation of zero. Deliberately not an int, so it cannot leak into arithmetic."""

    INFINITY = "inf"

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = Infinity.INFINITY

Valuation = Union[int, Infinity]


@functools.lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def binomial(a: int, k: int) -> int:
    """Return ``a(a-1)...(a-k+1)/k!`` for any integer ``a`` and ``k >= 0``.

    Nonnegative ``a`` goes through :func:`math.comb`. Otherwise the
    product is accumulated with incremental division; each partial product
    is itself a binomial coefficient, so every division is exact.

    >>> binomial(-5, 3)
    -35
    >>> binomial(7, 0)
    1
    """
    if k < 0:
        raise ValueError("binomial: k must be nonnegative")
    if a >= 0:
        return math.comb(a, k)
    result = 1
    for i in range(k):
        result = result * (a - i) // (i + 1)
    return result


def vp(n: int, p: int) -> Valuation:
    """Largest ``e`` with ``p**e`` dividing ``n``; :data:`INFINITY` for ``n == 0``."""
    _check_prime(p)
    if n == 0:
        return INFINITY
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def v2(n: int) -> Valuation:
    if n == 0:
        return INFINITY
    n = abs(n)
    return (n & -n).bit_length() - 1


def vp_binomial_kummer(a: int, b: int, p: int) -> int:
    """Number of carries when adding ``a`` and ``b`` in base ``p``.

    By Kummer's theorem this is ``vp(binomial(a + b, a), p)``; nothing in
    here touches the binomial itself.
    """
    _check_prime(p)
    if a < 0 or b < 0:
        raise ValueError("vp_binomial_kummer: a and b must be nonnegative")
    carries = 0
    carry = 0
    while a or b or carry:
        digit_sum = a % p + b % p + carry
        carry = 1 if digit_sum >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def vp_factorial(n: int, p: int) -> int:
    """Legendre: ``v_p(n!) = sum_i floor(n / p**i)``."""
    _check_prime(p)
    if n < 0:
        raise ValueError("vp_factorial: n must be nonnegative")
    total = 0
    while n:
        n //= p
        total += n
    return total


def vp_binomial_legendre(a: int, b: int, p: int) -> int:
    """``v_p(binomial(a + b, a))`` from three factorial valuations."""
    return vp_factorial(a + b, p) - vp_factorial(a, p) - vp_factorial(b, p)
