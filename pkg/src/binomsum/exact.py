"""Exact integer and rational arithmetic primitives.

All functions operate on Python ints (arbitrary precision) and
fractions.Fraction; nothing here ever rounds. The factorial cache grows
incrementally so repeated audits over a contiguous range stay amortized
linear, and is synchronized so concurrent audits may share it.
"""
from __future__ import annotations

import threading
from fractions import Fraction

DEFAULT_FACTORIAL_CACHE_LIMIT = 10_000

_cache_lock = threading.Lock()
_factorials: list[int] = [1, 1]
_cache_limit = DEFAULT_FACTORIAL_CACHE_LIMIT


def set_factorial_cache_limit(limit: int) -> None:
    """Set the largest argument kept in the factorial cache.

    Larger arguments are still computed exactly, just not stored.
    """
    global _cache_limit
    if limit < 1:
        raise ValueError("cache limit must be positive")
    with _cache_lock:
        _cache_limit = limit
        del _factorials[limit + 1:]


def factorial(n: int) -> int:
    """n! for n >= 0, memoized up to the configured cache limit."""
    if n < 0:
        raise ValueError(f"factorial of negative argument {n}")
    if n <= _cache_limit:
        if n >= len(_factorials):
            with _cache_lock:
                # re-check under the lock; another thread may have extended
                last = len(_factorials) - 1
                acc = _factorials[last]
                for m in range(last + 1, n + 1):
                    acc *= m
                    _factorials.append(acc)
        return _factorials[n]
    # beyond the cache limit: compute from the cached prefix without storing
    base = min(len(_factorials) - 1, n)
    acc = _factorials[base]
    for m in range(base + 1, n + 1):
        acc *= m
    return acc


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention.

    C(a, b) = 0 whenever b < 0, a < 0, or b > a; otherwise a!/(b!(a-b)!).
    The zero convention is what makes hypergeometric terms vanish outside
    their support, so audits rely on it rather than raising.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return factorial(a) // (factorial(b) * factorial(a - b))


def legendre_valuation(p: int, n: int) -> int:
    """v_p(n!) as the sum of floor(n / p^i); p must be prime (caller's duty)."""
    if p < 2:
        raise ValueError(f"modulus {p} is not a valid prime")
    if n < 0:
        raise ValueError(f"negative factorial argument {n}")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def int_valuation(p: int, m: int) -> int:
    """Exponent of p in the nonzero integer m."""
    if p < 2:
        raise ValueError(f"modulus {p} is not a valid prime")
    if m == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def rat_valuation(p: int, x: Fraction | int) -> int:
    """v_p of a nonzero rational: v_p(numerator) - v_p(denominator)."""
    q = Fraction(x)
    if q == 0:
        raise ValueError("valuation of 0 is undefined")
    v = int_valuation(p, q.numerator)
    if q.denominator != 1:
        v -= int_valuation(p, q.denominator)
    return v


def floor_div(a: int, b: int) -> int:
    """floor(a / b) for b > 0, rounding toward minus infinity."""
    if b <= 0:
        raise ValueError(f"floor_div by non-positive divisor {b}")
    return a // b


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, ascending (simple sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray((limit - p * p) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]
