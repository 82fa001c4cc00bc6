"""Polynomials over prime fields: arithmetic, factorization, roots.

Factorization is squarefree decomposition, distinct-degree splitting driven
by a Frobenius matrix, then Cantor-Zassenhaus equal-degree splitting.  For
odd p the splitter is a^((p^d - 1)/2) - 1, for p = 2 the trace map
a + a^2 + ... + a^(2^(kd-1)); both feed the same splitting driver.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple

from .intpoly import IntPoly, trim

SCAN_THRESHOLD = 64


def reduce(a: Sequence[int], p: int) -> List[int]:
    return trim([v % p for v in a])


def add(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([v % p for v in out])


def scale(a: Sequence[int], c: int, p: int) -> List[int]:
    return trim([(c * v) % p for v in a])


def monic(a: Sequence[int], p: int) -> List[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [(v * inv) % p for v in a]


def divmod_(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = (r[k + db] * inv) % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """a mod b for monic b (the common case; avoids building the quotient)."""
    r = list(a)
    db = len(b) - 1
    if b[-1] != 1:
        return divmod_(a, b, p)[1]
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            base = k - db
            for j in range(db):
                r[base + j] -= c * b[j]
        r[k] = 0
    return trim([v % p for v in r[:db]])


def gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p)


def deriv(a: Sequence[int], p: int) -> List[int]:
    return trim([(k * a[k]) % p for k in range(1, len(a))])


def powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = rem(a, f, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), f, p)
    return result


def evaluate(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def frobenius_matrix(f: Sequence[int], p: int) -> List[List[int]]:
    """Rows are x^(p*j) mod f for j < deg f; applying it computes a^p mod f."""
    n = len(f) - 1
    xp = powmod([0, 1], p, f, p)
    rows = [[1]]
    cur = [1]
    for _ in range(1, n):
        cur = rem(mul(cur, xp, p), f, p)
        rows.append(cur)
    return [r + [0] * (n - len(r)) for r in rows]


def apply_frobenius(a: Sequence[int], Q: List[List[int]], p: int) -> List[int]:
    n = len(Q)
    out = [0] * n
    for j, c in enumerate(a):
        if c:
            row = Q[j]
            for i in range(n):
                out[i] += c * row[i]
    return trim([v % p for v in out])


def squarefree_factorization(f: Sequence[int], p: int) -> List[Tuple[List[int], int]]:
    """Monic f -> [(g, e)] with f = prod g^e, each g squarefree."""
    f = monic(f, p)
    out: List[Tuple[List[int], int]] = []
    _sqf(f, p, 1, out)
    merged: Dict[Tuple[int, ...], int] = {}
    for g, e in out:
        merged[tuple(g)] = merged.get(tuple(g), 0) + e
    return [(list(g), e) for g, e in merged.items()]


def _sqf(f: List[int], p: int, mult: int, out: List[Tuple[List[int], int]]) -> None:
    if len(f) <= 1:
        return
    d = deriv(f, p)
    if not d:
        # f = h(x^p); over F_p the p-th root is h itself
        h = [f[i] for i in range(0, len(f), p)]
        _sqf(h, p, mult * p, out)
        return
    c = gcd(f, d, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i * mult))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if len(c) > 1:
        h = [c[i] for i in range(0, len(c), p)]
        _sqf(h, p, mult * p, out)


def distinct_degree(f: Sequence[int], p: int) -> List[Tuple[List[int], int]]:
    """Squarefree monic f -> [(product of all irreducible factors of degree d, d)]."""
    f = list(f)
    out = []
    if len(f) <= 1:
        return out
    Q = frobenius_matrix(f, p)
    h = [0, 1]
    d = 0
    g_rest = f
    while len(g_rest) - 1 >= 2 * (d + 1):
        d += 1
        h = apply_frobenius(h, Q, p)
        g = gcd(g_rest, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            g_rest = divmod_(g_rest, g, p)[0]
            h = rem(h, g_rest, p) if len(g_rest) > 1 else h
            if len(g_rest) > 1:
                Q = frobenius_matrix(g_rest, p)
    if len(g_rest) > 1:
        out.append((g_rest, len(g_rest) - 1))
    return out


def _splitter(a: List[int], f: List[int], d: int, p: int, Q) -> List[int]:
    if p == 2:
        # trace to F_2 from each component F_{2^d}
        t = list(a)
        cur = list(a)
        for _ in range(d - 1):
            cur = apply_frobenius(cur, Q, p)
            t = add(t, cur, p)
        return t
    # norm to F_p, then the quadratic character
    nrm = list(a)
    cur = list(a)
    for _ in range(d - 1):
        cur = apply_frobenius(cur, Q, p)
        nrm = rem(mul(nrm, cur, p), f, p)
    b = powmod(nrm, (p - 1) // 2, f, p)
    return sub(b, [1], p)


def equal_degree(f: List[int], d: int, p: int, rng: random.Random) -> List[List[int]]:
    """Split a squarefree monic product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    Q = frobenius_matrix(f, p)
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) <= 1:
            continue
        g = gcd(f, a, p)
        if 1 < len(g) < len(f):
            break
        g = gcd(f, _splitter(a, f, d, p, Q), p)
        if 1 < len(g) < len(f):
            break
    h = divmod_(f, g, p)[0]
    return equal_degree(g, d, p, rng) + equal_degree(monic(h, p), d, p, rng)


def factor_list(f: Sequence[int], p: int, rng: random.Random | None = None) -> List[Tuple[List[int], int]]:
    """Monic irreducible factors of f mod p with multiplicities, canonically sorted."""
    f = reduce(f, p)
    if not f:
        raise ValueError("factorization of the zero polynomial")
    rng = rng or random.Random(0)
    out = []
    for g, e in squarefree_factorization(f, p):
        for part, d in distinct_degree(g, p):
            for h in equal_degree(part, d, p, rng):
                out.append((h, e))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return out


def degree_pattern(f: Sequence[int], p: int) -> List[int]:
    """Sorted degrees of the irreducible factors of a squarefree f mod p."""
    f = monic(reduce(f, p), p)
    out = []
    for part, d in distinct_degree(f, p):
        out.extend([d] * ((len(part) - 1) // d))
    return sorted(out)


def is_squarefree(f: Sequence[int], p: int) -> bool:
    f = reduce(f, p)
    d = deriv(f, p)
    if not d:
        return len(f) <= 1
    return len(gcd(f, d, p)) == 1


def roots(f: Sequence[int], p: int, rng: random.Random | None = None) -> List[int]:
    """Sorted roots of f in F_p."""
    f = reduce(f, p)
    if not f:
        raise ValueError("roots of the zero polynomial")
    if len(f) == 1:
        return []
    if p < SCAN_THRESHOLD:
        return [a for a in range(p) if evaluate(f, a, p) == 0]
    f = monic(f, p)
    xp = powmod([0, 1], p, f, p)
    g = gcd(f, sub(xp, [0, 1], p), p)
    if len(g) <= 1:
        return []
    rng = rng or random.Random(0)
    lin = equal_degree(g, 1, p, rng)
    return sorted((-h[0]) % p for h in lin)


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p with residues in [0, p), trimmed."""

    prime: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(reduce(self.coeffs, self.prime)))

    @classmethod
    def from_int(cls, f: IntPoly, p: int) -> "ModPoly":
        return cls(p, f.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, a: int) -> int:
        return evaluate(self.coeffs, a, self.prime)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        return ModPoly(self.prime, tuple(mul(self.coeffs, other.coeffs, self.prime)))

    def __repr__(self) -> str:
        return f"ModPoly({self.prime}, {list(self.coeffs)})"


def factor_mod_p(f: ModPoly, seed: int = 0) -> List[Tuple[ModPoly, int]]:
    """Monic irreducible factors of f with multiplicities (seeded randomness)."""
    if f.is_zero():
        raise ValueError("factorization of the zero polynomial")
    p = f.prime
    return [(ModPoly(p, tuple(g)), e) for g, e in factor_list(f.coeffs, p, random.Random(seed))]


def roots_mod_p(f: ModPoly, seed: int = 0) -> Set[int]:
    """Exactly the residues a with f(a) = 0 mod p."""
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    return set(roots(f.coeffs, f.prime, random.Random(seed)))
