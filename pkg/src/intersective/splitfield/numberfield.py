"""Simple algebraic extensions Q(theta) = Q[y]/(m), with m monic integral.

Elements are integer polynomials in theta over a positive common
denominator, reduced mod m and gcd-normalized after every operation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpz

from ..numtheory import ResourceError, first_primes
from ..polyring import IntPoly, modp
from ..polyring.intpoly import format_poly, pcontent, trim
from ..polyring.resultant import gcd_int, resultant_int
from ..polyring.zassenhaus import factor_squarefree_int, is_irreducible


def _reduce_monic(a: List[int], m: Sequence[int]) -> List[int]:
    """a mod m over Z (m monic)."""
    a = list(a)
    d = len(m) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d):
                a[i - d + j] -= c * m[j]
        a[i] = 0
    return trim(a[:d]) if len(a) > d else trim(a)


def _imul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class NumberField:
    """Q(theta) with theta a root of the monic irreducible integer polynomial minpoly."""

    def __init__(self, minpoly: IntPoly, check: bool = True, name: str = "t"):
        if not minpoly.is_monic() or minpoly.degree < 1:
            raise ValueError("minimal polynomial must be monic of positive degree")
        if check and minpoly.degree > 1 and not is_irreducible(minpoly):
            raise ValueError(f"{minpoly} is reducible")
        self.minpoly = minpoly
        self.m = list(minpoly.coeffs)
        self.degree = minpoly.degree
        self.name = name

    def __repr__(self) -> str:
        return f"NumberField({self.minpoly})"

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, Fraction, or rational coefficient list into the field."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (int, Fraction)):
            value = [value]
        fr = [Fraction(v) for v in value]
        den = 1
        for v in fr:
            den = den * v.denominator // math.gcd(den, v.denominator)
        return FieldElement.make(self, [int(v * den) for v in fr], den)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (), 1)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,), 1)

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self(-self.m[0])
        return FieldElement(self, (0, 1), 1)


@dataclass(frozen=True)
class FieldElement:
    owner: NumberField
    num: Tuple[int, ...]
    den: int

    @staticmethod
    def make(K: NumberField, num: List[int], den: int) -> "FieldElement":
        num = _reduce_monic(num, K.m)
        if not num:
            return FieldElement(K, (), 1)
        g = math.gcd(pcontent(num), den)
        if den < 0:
            g = -g
        return FieldElement(K, tuple(v // g for v in num), den // g)

    @property
    def coeffs(self) -> List[Fraction]:
        return [Fraction(v, self.den) for v in self.num]

    def sort_key(self) -> Tuple:
        d = self.owner.degree
        return tuple(Fraction(v, self.den) for v in self.num) + (Fraction(0),) * (d - len(self.num))

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return len(self.num) <= 1

    def __add__(self, other) -> "FieldElement":
        other = self.owner(other)
        a = [v * other.den for v in self.num]
        b = [v * self.den for v in other.num]
        n = max(len(a), len(b))
        s = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        return FieldElement.make(self.owner, s, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.owner, tuple(-v for v in self.num), self.den)

    def __sub__(self, other) -> "FieldElement":
        return self + (-self.owner(other))

    def __rsub__(self, other) -> "FieldElement":
        return self.owner(other) - self

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, int):
            return FieldElement.make(self.owner, [v * other for v in self.num], self.den)
        other = self.owner(other)
        return FieldElement.make(self.owner, _imul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        out = self.owner.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        s = _inverse_mod(self.num, self.owner.m)
        inv = self.owner(s)
        return FieldElement.make(self.owner, [v * self.den for v in inv.num], inv.den)

    def __truediv__(self, other) -> "FieldElement":
        return self * self.owner(other).inverse()

    def __str__(self) -> str:
        if not self.num:
            return "0"
        body = format_poly(list(self.num), self.owner.name)
        return body if self.den == 1 else f"({body})/{self.den}"

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": self.den}


def _inverse_mod(a: Sequence[int], m: Sequence[int]) -> List[Fraction]:
    """s with s * a = 1 mod m over Q: solve the multiplication-by-a system."""
    d = len(m) - 1
    cols = []
    cur = list(a)
    for _ in range(d):
        cur = _reduce_monic(cur, m)
        cols.append(cur + [0] * (d - len(cur)))
        cur = [0] + cur
    rows = [[cols[j][i] for j in range(d)] for i in range(d)]
    try:
        return solve_rational(rows, [1] + [0] * (d - 1))
    except ZeroDivisionError:
        raise ZeroDivisionError("element not invertible (minimal polynomial reducible)") from None


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> List[Fraction]:
    """Solve the square system rows * x = rhs over Q (fraction-free elimination)."""
    n = len(rows)
    A = []
    for r, b in zip(rows, rhs):
        vals = [Fraction(v) for v in list(r) + [b]]
        den = 1
        for v in vals:
            den = den * v.denominator // math.gcd(den, v.denominator)
        A.append([mpz(int(v * den)) for v in vals])
    prev = mpz(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        A[k], A[piv] = A[piv], A[k]
        akk, rk = A[k][k], A[k]
        for i in range(k + 1, n):
            ri = A[i]
            aik = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    # last pivot is det(A); by Cramer det * x is integral, so these divisions are exact
    det = prev
    y = [0] * n
    for i in range(n - 1, -1, -1):
        ri = A[i]
        acc = det * ri[n]
        for j in range(i + 1, n):
            if ri[j]:
                acc -= ri[j] * y[j]
        y[i] = acc // ri[i]
    return [Fraction(int(v), int(det)) for v in y]


# --- polynomials over a number field: ascending lists of FieldElement ----

KPoly = List[FieldElement]


def kp_trim(a: KPoly) -> KPoly:
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def kp_from_int(K: NumberField, f: IntPoly) -> KPoly:
    return [K(c) for c in f.coeffs]


def kp_add(a: KPoly, b: KPoly) -> KPoly:
    if len(a) < len(b):
        a, b = b, a
    return kp_trim([x + b[i] if i < len(b) else x for i, x in enumerate(a)])


def kp_sub(a: KPoly, b: KPoly) -> KPoly:
    return kp_add(a, [-x for x in b])


def kp_mul(a: KPoly, b: KPoly) -> KPoly:
    if not a or not b:
        return []
    K = a[0].owner
    out = [K.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return kp_trim(out)


def kp_eval(a: KPoly, x: FieldElement) -> FieldElement:
    acc = x.owner.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def kp_monic(a: KPoly) -> KPoly:
    inv = a[-1].inverse()
    return [c * inv for c in a]


def kp_divmod(a: KPoly, b: KPoly) -> Tuple[KPoly, KPoly]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    K = b[0].owner
    a = list(a)
    inv = b[-1].inverse()
    db = len(b) - 1
    q = [K.zero()] * max(len(a) - db, 1)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] * inv
        q[i] = c
        if not c.is_zero():
            for j in range(db + 1):
                a[i + j] = a[i + j] - c * b[j]
    return kp_trim(q), kp_trim(a[:db])


def kp_gcd(a: KPoly, b: KPoly) -> KPoly:
    a, b = kp_trim(a), kp_trim(b)
    while b:
        a, b = b, kp_divmod(a, b)[1]
    return kp_monic(a) if a else a


def kp_shift(a: KPoly, s: FieldElement) -> KPoly:
    """a(x + s)."""
    out: KPoly = []
    lin = [s, s.owner.one()]
    for c in reversed(a):
        out = kp_add(kp_mul(out, lin), [c])
    return out


def kp_map(a: KPoly, image_of_gen: FieldElement) -> KPoly:
    """Apply the embedding theta -> image_of_gen to each coefficient."""
    return [embed(c, image_of_gen) for c in a]


def embed(c: FieldElement, image_of_gen: FieldElement) -> FieldElement:
    L = image_of_gen.owner
    if c.is_rational():
        return L(Fraction(c.num[0], c.den) if c.num else 0)
    acc = L.zero()
    for v in reversed(c.num):
        acc = acc * image_of_gen + v
    return acc * Fraction(1, c.den)


def kp_str(a: KPoly) -> str:
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c.is_zero():
            continue
        mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        cs = str(c)
        if mon:
            terms.append(mon if cs == "1" else f"({cs})*{mon}")
        else:
            terms.append(f"({cs})")
    return " + ".join(terms) or "0"


# --- norms and Trager factorization -------------------------------------


def _bivariate(a: KPoly) -> Tuple[List[List[int]], int]:
    """Integer coefficients (as polys in theta) of D*a, with the common denominator D."""
    D = 1
    for c in a:
        D = D * c.den // math.gcd(D, c.den)
    return [[v * (D // c.den) for v in c.num] for c in a], D


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> List[Fraction]:
    """Coefficients of the interpolating polynomial (Newton form, exact)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k + 1] += v
            nxt[k] -= v * xs[i]
        nxt[0] += coef[i]
        out = nxt
    return trim(out)


def norm(a: KPoly) -> IntPoly:
    """N(a) = prod over conjugates sigma of sigma(a); a in K[x] must have integral norm.

    Computed as Res_y(m(y), a(x, y)) by evaluation at integer x and exact
    interpolation.
    """
    a = kp_trim(a)
    K = a[0].owner
    n = len(a) - 1
    d = K.degree
    if d == 1:
        out = [c.coeffs[0] if c.num else Fraction(0) for c in a]
        out = [Fraction(v) for v in out]
    else:
        rows, D = _bivariate(a)
        xs = list(range(n * d + 1))
        ys = []
        for x0 in xs:
            ev: List[int] = []
            p = 1
            for r in rows:
                if r:
                    ev = _iadd(ev, [v * p for v in r])
                p *= x0
            ev = trim(ev)
            ys.append(resultant_int(K.m, ev) if ev else 0)
        coef = _interpolate(xs, ys)
        scale = Fraction(1, D**d)
        out = [v * scale for v in coef]
    if any(v.denominator != 1 for v in out):
        raise ValueError("norm is not integral")
    return IntPoly(tuple(int(v) for v in out))


def _iadd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _is_squarefree_int(f: IntPoly) -> bool:
    """Exact test with a cheap modular shortcut (squarefree mod p implies squarefree)."""
    c = list(f.coeffs)
    for p in first_primes(40)[25:]:
        if c[-1] % p and modp.is_squarefree(c, p):
            return True
    return len(gcd_int(c, list(f.derivative().coeffs))) == 1


def _shifts():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def factor_over_field(f: KPoly, K: NumberField, rng: Optional[random.Random] = None) -> List[KPoly]:
    """Monic irreducible factors over K of a squarefree f in K[x] (Trager).

    Shift x -> x - s*theta until the norm is squarefree, factor the norm over
    Q and pull each factor back by a gcd over K.
    """
    f = kp_monic(kp_trim(f))
    n = len(f) - 1
    if n <= 1:
        return [f]
    theta = K.gen()
    limit = n * K.degree + 1
    for count, s in enumerate(_shifts()):
        if count > limit:
            raise AssertionError("no squarefree norm found; input not squarefree")
        fs = kp_shift(f, theta * (-s)) if s else f
        N = norm(fs)
        if _is_squarefree_int(N):
            break
    parts = factor_squarefree_int(list(N.coeffs), rng)
    if len(parts) == 1:
        return [f]
    out = []
    for g in parts:
        h = kp_gcd(fs, [K(v) for v in g])
        out.append(kp_shift(h, theta * s) if s else h)
    out.sort(key=lambda h: (len(h), [c.sort_key() for c in h]))
    prod = [K.one()]
    for h in out:
        prod = kp_mul(prod, h)
    if [c.sort_key() for c in prod] != [c.sort_key() for c in f]:
        raise AssertionError("factorization over K does not multiply back")
    return out


@dataclass
class PrimitiveElement:
    field: NumberField
    shift: int
    old_gen: FieldElement  # image of the generator of K in L
    new_root: FieldElement  # a root of h in L


def _theta_in_gamma_basis(K: NumberField, h: KPoly, k: int) -> List[Fraction]:
    """Coordinates of theta in the basis gamma^n of L, gamma = beta + k*theta.

    Powers of gamma are written in the tower basis theta^i beta^j and the
    resulting linear system is solved over Q, so no field inverses are needed.
    """
    d, e = K.degree, len(h) - 1
    D = d * e
    theta = K.gen()
    kt = theta * k

    def coords(x: List[FieldElement]) -> List[Fraction]:
        out = [Fraction(0)] * D
        for j, c in enumerate(x):
            for i, v in enumerate(c.num):
                out[j * d + i] = Fraction(v, c.den)
        return out

    cur = [K.one()] + [K.zero()] * (e - 1)
    cols = []
    for _ in range(D):
        cols.append(coords(cur))
        top = cur[-1]
        nxt = [K.zero()] + cur[:-1]
        nxt = [a - top * b for a, b in zip(nxt, h[:e])]
        cur = [a + kt * b for a, b in zip(nxt, cur)]
    target = [Fraction(0)] * D
    target[1] = Fraction(1)
    return solve_rational([[cols[n][r] for n in range(D)] for r in range(D)], target)


def primitive_element(K: NumberField, h: KPoly, cap: Optional[int] = None) -> PrimitiveElement:
    """L = K(beta) = Q(gamma), gamma = beta + k*theta with the least k >= 0 giving a squarefree norm."""
    h = kp_monic(kp_trim(h))
    e = len(h) - 1
    if cap is not None and K.degree * e > cap:
        raise ResourceError(f"extension degree {K.degree * e} exceeds splitting cap {cap}")
    theta = K.gen()
    k = 0
    while True:
        hk = kp_shift(h, theta * (-k)) if k else h
        N = norm(hk)
        if _is_squarefree_int(N):
            break
        k += 1
        if k > e * K.degree + 1:
            raise AssertionError("no primitive element found; h not squarefree")
    L = NumberField(N, check=False)
    gamma = L.gen()
    if K.degree == 1:
        old = L(-K.m[0])
    else:
        old = L(_theta_in_gamma_basis(K, h, k))
    m_L = [L(v) for v in K.m]
    beta = gamma - old * k
    if not kp_eval(m_L, old).is_zero():
        raise AssertionError("embedded generator fails its minimal polynomial")
    if not kp_eval(kp_map(h, old), beta).is_zero():
        raise AssertionError("embedded root fails h")
    return PrimitiveElement(L, k, old, beta)
