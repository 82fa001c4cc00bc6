"""Resultants, discriminants and gcds over Z[x]."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .intpoly import IntPoly, pcontent, pderiv, pdiv_int, trim


def pseudo_rem(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x]."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        trim(r)
        e -= 1
    if e > 0 and r:
        m = lb**e
        r = [m * v for v in r]
    return r


def resultant_int(a: Sequence[int], b: Sequence[int]) -> int:
    """Sylvester resultant of two nonzero integer polynomials (subresultant PRS)."""
    a, b = list(a), list(b)
    if not a or not b:
        raise ValueError("resultant of the zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, cb = pcontent(a), pcontent(b)
    a = [v // ca for v in a]
    b = [v // cb for v in b]
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    g = h = 1
    while db > 0:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = pseudo_rem(a, b)
        a = b
        if not r:
            return 0
        div = g * h**delta
        b = [v // div for v in r]
        da, db = len(a) - 1, len(b) - 1
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
    # deg b == 0
    if da == 0:
        return s * t
    h = b[-1] ** da // h ** (da - 1) if da >= 1 else h
    return s * t * h


def _to_int_scaled(a: Sequence) -> Tuple[List[int], int]:
    """Clear denominators: returns (integer coeffs, d) with a = coeffs / d."""
    d = 1
    for v in a:
        if isinstance(v, Fraction):
            d = d * v.denominator // _gcd(d, v.denominator)
    return [int(v * d) for v in a], d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def resultant_rat(a: Sequence, b: Sequence) -> Fraction:
    """Resultant of polynomials with rational coefficients."""
    ai, da = _to_int_scaled(trim(list(a)))
    bi, db = _to_int_scaled(trim(list(b)))
    r = resultant_int(ai, bi)
    return Fraction(r, da ** (len(bi) - 1) * db ** (len(ai) - 1))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) as the Sylvester determinant; zero iff a common factor exists."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    return resultant_int(f.coeffs, g.coeffs)


def discriminant(f: IntPoly) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    r = resultant_int(f.coeffs, pderiv(f.coeffs))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.lc)
    assert rem == 0
    return q


def gcd_int(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Primitive gcd in Z[x] with positive leading coefficient (primitive PRS)."""
    a, b = trim(list(a)), trim(list(b))
    if not a:
        return _normalize(b)
    if not b:
        return _normalize(a)
    c = _gcd(pcontent(a), pcontent(b))
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, (_primitive(r) if r else [])
    a = _normalize(a)
    return [c * v for v in a]


def _primitive(a: List[int]) -> List[int]:
    g = pcontent(a)
    return [v // g for v in a] if g else a


def _normalize(a: List[int]) -> List[int]:
    if not a:
        return a
    a = _primitive(a)
    return [-v for v in a] if a[-1] < 0 else a


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    return IntPoly(tuple(gcd_int(f.coeffs, g.coeffs)))


def squarefree_decomposition(f: IntPoly) -> List[Tuple[IntPoly, int]]:
    """Yun's algorithm on the primitive part: [(a_i, i)] with pp(f) = prod a_i^i."""
    a = list(f.primitive().coeffs)
    if len(a) <= 1:
        return []
    out = []
    b = pderiv(a)
    c = gcd_int(a, b)
    w = pdiv_int(a, c)
    y = pdiv_int(b, c)
    i = 1
    while len(w) > 1:
        wd = pderiv(w)
        z = [yv - wv for yv, wv in zip(y + [0] * (len(wd) - len(y)), wd + [0] * (len(y) - len(wd)))]
        z = trim(z)
        g = gcd_int(w, z) if z else _normalize(w)
        if len(g) > 1:
            out.append((IntPoly(tuple(g)), i))
        w = pdiv_int(w, g)
        y = pdiv_int(z, g) if z else []
        i += 1
    return out


def squarefree_part(f: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors of f (primitive)."""
    out = IntPoly((1,))
    for a, _ in squarefree_decomposition(f):
        out = out * a
    return out
