"""Small integer helpers: primes, valuations, factorization of integers."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, List

import sympy


class ResourceError(RuntimeError):
    """A configured cap was exceeded; the computation gave no answer."""


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


@lru_cache(maxsize=16)
def _sieve(limit: int) -> tuple:
    if limit < 2:
        return ()
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(limit: int) -> List[int]:
    return list(_sieve(limit))


def first_primes(count: int) -> List[int]:
    """The first ``count`` primes."""
    if count <= 0:
        return []
    limit = 16
    while True:
        ps = _sieve(limit)
        if len(ps) >= count:
            return list(ps[:count])
        limit *= 2


def iter_primes(start: int = 2) -> Iterator[int]:
    p = start - 1
    while True:
        p = int(sympy.nextprime(p))
        yield p


def prime_divisors(n: int) -> List[int]:
    """Sorted prime divisors of a nonzero integer."""
    if n == 0:
        raise ValueError("0 has no finite set of prime divisors")
    return sorted(int(p) for p in sympy.factorint(abs(n)))


def valuation(n: int, p: int) -> float | int:
    """p-adic valuation of an integer; ``math.inf`` for 0."""
    if n == 0:
        return math.inf
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel: n = s * k^2 with s squarefree."""
    if n == 0:
        return 0
    s = -1 if n < 0 else 1
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            s *= int(p)
    return s


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n
