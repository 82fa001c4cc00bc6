"""Factorization over Q: squarefree parts, Hensel lifting, Zassenhaus recombination."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple

from ..numtheory import ResourceError, first_primes
from . import modp
from .intpoly import IntPoly, pcontent, pdiv_int, pmul, trim
from .resultant import discriminant, squarefree_decomposition

DEFAULT_DEGREE_CAP = 24
PRIME_TRIALS = 8


@dataclass(frozen=True)
class QFactorization:
    """constant * prod(factor^mult), factors primitive, irreducible, canonically sorted."""

    constant: Fraction
    factors: Tuple[Tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        out = IntPoly((1,))
        for g, e in self.factors:
            out = out * g**e
        c = self.constant
        if c.denominator != 1:
            raise ValueError("non-integral constant")
        return out * int(c)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def _symmetric(a: Sequence[int], m: int) -> List[int]:
    half = m // 2
    return trim([(v % m) - m if (v % m) > half else v % m for v in a])


def _mul_mod(a, b, m):
    return trim([v % m for v in pmul(a, b)])


def _divmod_monic(a: Sequence[int], b: Sequence[int], m: int) -> Tuple[List[int], List[int]]:
    """Division by a monic b with coefficients mod m."""
    r = [v % m for v in a]
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] % m
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % m
    return trim(q), trim(r[:db])


def _sub_mod(a, b, m):
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return trim([v % m for v in out])


def _add_mod(a, b, m):
    return _sub_mod(a, [-v for v in b], m)


def _ext_gcd_p(g: List[int], h: List[int], p: int) -> Tuple[List[int], List[int]]:
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = modp.divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, modp.sub(s0, modp.mul(q, s1, p), p)
        t0, t1 = t1, modp.sub(t0, modp.mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return modp.scale(s0, inv, p), modp.scale(t0, inv, p)


def _hensel_pair(f: List[int], g: List[int], h: List[int], p: int, target: int) -> Tuple[List[int], List[int], int]:
    """Lift monic f = g*h (mod p, g,h monic coprime) to a modulus >= target.

    Quadratic Hensel step; returns lifted g, h and the modulus reached.
    """
    s, t = _ext_gcd_p(g, h, p)
    m = p
    while m < target:
        m2 = m * m
        e = _sub_mod(f, _mul_mod(g, h, m2), m2)
        q, r = _divmod_monic(_mul_mod(s, e, m2), h, m2)
        g_new = _add_mod(_add_mod(g, _mul_mod(t, e, m2), m2), _mul_mod(q, g, m2), m2)
        h_new = _add_mod(h, r, m2)
        b = _sub_mod(_add_mod(_mul_mod(s, g_new, m2), _mul_mod(t, h_new, m2), m2), [1], m2)
        c, d = _divmod_monic(_mul_mod(s, b, m2), h_new, m2)
        s = _sub_mod(s, d, m2)
        t = _sub_mod(_sub_mod(t, _mul_mod(t, b, m2), m2), _mul_mod(c, g_new, m2), m2)
        g, h, m = g_new, h_new, m2
    return g, h, m


def hensel_lift(f: List[int], factors: List[List[int]], p: int, target: int) -> Tuple[List[List[int]], int]:
    """Lift monic modular factors of f (lc(f) coprime to p) to modulus >= target.

    Returns monic lifted factors whose product is lc(f)^-1 * f mod the modulus.
    """
    k = 1
    m = p
    while m < target:
        m *= m
        k *= 2
    modulus = p**k
    inv = pow(f[-1], -1, modulus)
    fm = [(v * inv) % modulus for v in f]
    out = _lift_tree(fm, factors, p, modulus)
    return out, modulus


def _lift_tree(f: List[int], factors: List[List[int]], p: int, modulus: int) -> List[List[int]]:
    if len(factors) == 1:
        return [[v % modulus for v in f]]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for a in left:
        g = modp.mul(g, a, p)
    h = [1]
    for a in right:
        h = modp.mul(h, a, p)
    G, H, m = _hensel_pair(f, g, h, p, modulus)
    G = [v % modulus for v in G]
    H = [v % modulus for v in H]
    return _lift_tree(G, left, p, modulus) + _lift_tree(H, right, p, modulus)


def _coefficient_bound(f: Sequence[int]) -> int:
    """Bound on |coefficients| of lc(f) * g for any factor g of f (Mignotte style)."""
    norm2 = math.isqrt(sum(v * v for v in f)) + 1
    n = len(f) - 1
    return (2**n) * norm2 * abs(f[-1])


def _subset_sums(degs: Sequence[int]) -> Set[int]:
    s = {0}
    for d in degs:
        s |= {x + d for x in s}
    return s


def _choose_prime(f: List[int], rng: random.Random) -> Tuple[int, List[List[int]], Set[int]]:
    """Try several good primes; keep the one with fewest modular factors.

    Also intersects the achievable factor-degree sums across all tried primes.
    """
    n = len(f) - 1
    allowed = set(range(n + 1))
    best = None
    tried = 0
    for p in first_primes(400)[1:]:
        if f[-1] % p == 0 or not modp.is_squarefree(f, p):
            continue
        degs = modp.degree_pattern(f, p)
        allowed &= _subset_sums(degs)
        if best is None or len(degs) < len(best[1]):
            best = (p, degs)
        tried += 1
        if len(degs) == 1 or allowed == {0, n} or tried >= PRIME_TRIALS:
            break
    if best is None:
        raise ResourceError("no good prime found for modular factorization")
    p = best[0]
    if allowed == {0, n}:
        return p, [], allowed
    mods = [g for g, _ in modp.factor_list(modp.monic(modp.reduce(f, p), p), p, rng)]
    return p, mods, allowed


def factor_squarefree_int(f: List[int], rng: Optional[random.Random] = None) -> List[List[int]]:
    """Irreducible factors over Z of a primitive squarefree f with positive lc."""
    f = trim(list(f))
    n = len(f) - 1
    if n <= 1:
        return [f]
    if f[0] == 0:
        return [[0, 1]] + factor_squarefree_int(f[1:], rng)
    rng = rng or random.Random(0)
    p, mods, allowed = _choose_prime(f, rng)
    if not mods or len(mods) == 1:
        return [f]
    bound = 2 * _coefficient_bound(f) + 1
    lifted, M = hensel_lift(f, mods, p, bound)
    return _recombine(f, lifted, M, allowed)


def _recombine(f: List[int], lifted: List[List[int]], M: int, allowed: Set[int]) -> List[List[int]]:
    found: List[List[int]] = []
    remaining = list(range(len(lifted)))
    F = list(f)
    size = 1
    while 2 * size <= len(remaining):
        progress = False
        for subset in itertools.combinations(remaining, size):
            deg = sum(len(lifted[i]) - 1 for i in subset)
            if deg not in allowed or (len(F) - 1 - deg) not in allowed:
                continue
            b = F[-1]
            # constant-term screen before building the product
            c0 = b
            for i in subset:
                c0 = (c0 * lifted[i][0]) % M
            c0 = c0 - M if c0 > M // 2 else c0
            if c0 == 0 or (F[0] * b) % c0 != 0:
                continue
            g = [b % M]
            for i in subset:
                g = _mul_mod(g, lifted[i], M)
            g = _symmetric(g, M)
            cg = pcontent(g)
            g = [v // cg for v in g]
            if g[-1] < 0:
                g = [-v for v in g]
            q = pdiv_int(F, g)
            if q is None:
                continue
            found.append(g)
            F = q
            remaining = [i for i in remaining if i not in subset]
            # degree constraints are no longer meaningful for the cofactor
            allowed = set(range(len(F)))
            progress = True
            break
        if not progress:
            size += 1
    if len(F) > 1:
        found.append(F)
    return found


def factor_int_squarefree(f: IntPoly, rng: Optional[random.Random] = None) -> List[IntPoly]:
    """Irreducible factors of a squarefree integer polynomial (no degree cap)."""
    pp = f.primitive()
    return sorted((IntPoly(tuple(g)) for g in factor_squarefree_int(list(pp.coeffs), rng)), key=IntPoly.sort_key)


def factor_over_rationals(f: IntPoly, degree_cap: int = DEFAULT_DEGREE_CAP, seed: int = 0) -> QFactorization:
    """Complete irreducible factorization of a nonzero integer polynomial over Q."""
    if f.is_zero():
        raise ValueError("factorization of the zero polynomial")
    if f.degree > degree_cap:
        raise ResourceError(f"degree {f.degree} exceeds factorization cap {degree_cap}")
    rng = random.Random(seed)
    c = f.content()
    if f.lc < 0:
        c = -c
    factors = []
    for part, mult in squarefree_decomposition(f):
        for g in factor_squarefree_int(list(part.coeffs), rng):
            factors.append((IntPoly(tuple(g)), mult))
    factors.sort(key=lambda t: (t[0].sort_key(), t[1]))
    result = QFactorization(Fraction(c), tuple(factors))
    if result.expand() != f:
        raise AssertionError("factorization does not multiply back to the input")
    return result


def is_irreducible(f: IntPoly) -> bool:
    if f.degree < 1:
        return False
    if f.content() != 1:
        return f.degree == 0
    fac = factor_over_rationals(f, degree_cap=max(DEFAULT_DEGREE_CAP, f.degree))
    return fac.is_irreducible


def cycle_type(f: IntPoly, p: int) -> Tuple[int, ...]:
    """Degrees of the irreducible factors of f mod p, for p not dividing disc(f)."""
    d = discriminant(f)
    if d % p == 0:
        raise ValueError(f"p = {p} divides disc(f) = {d}")
    return tuple(modp.degree_pattern(f.coeffs, p))
