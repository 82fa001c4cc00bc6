"""Brute-force reference scans, independent of the algebraic machinery.

Used to cross-check verdicts: by the Chinese remainder theorem, f has a root
mod every n <= B iff it has a root mod every prime power q <= B, and each
such q is scanned over all residues.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

import numpy as np

from ..numtheory import primes_up_to

_CHUNK = 1 << 16


def _has_root_mod(coeffs: Sequence[int], q: int) -> bool:
    """Exhaustive scan of f over 0..q-1 (requires q^2 < 2^63)."""
    red = [c % q for c in coeffs]
    for start in range(0, q, _CHUNK):
        x = np.arange(start, min(q, start + _CHUNK), dtype=np.int64)
        acc = np.zeros_like(x)
        for c in reversed(red):
            acc = (acc * x + c) % q
        if not acc.all():
            return True
    return False


def has_root_mod(factors: Iterable[Sequence[int]], q: int) -> bool:
    return any(_has_root_mod(c, q) for c in factors)


def _coeff_lists(factors) -> List[List[int]]:
    return [list(getattr(g, "coeffs", g)) for g in factors]


def primes_without_root(factors, bound: int) -> List[int]:
    """Primes p <= bound with no root of the product mod p."""
    fs = _coeff_lists(factors)
    return [p for p in primes_up_to(bound) if not has_root_mod(fs, p)]


def first_modulus_without_root(factors, bound: int) -> Optional[int]:
    """Least prime power q <= bound with no root mod q, or None (root mod every n <= bound)."""
    if bound >= 3 * 10**9:
        raise ValueError("scan bound too large for 64-bit residues")
    fs = _coeff_lists(factors)
    qs = []
    for p in primes_up_to(bound):
        q = p
        while q <= bound:
            qs.append(q)
            q *= p
    for q in sorted(qs):
        if not has_root_mod(fs, q):
            return q
    return None
