"""Dense univariate polynomials with integer coefficients.

Coefficients are stored in ascending order: ``coeffs[k]`` multiplies ``x**k``.
The zero polynomial is the empty tuple.  Module-level helpers work on plain
lists and are shared with the modular and number-field code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


def trim(c: List) -> List:
    while c and c[-1] == 0:
        c.pop()
    return c


def padd(a: Sequence, b: Sequence) -> List:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def psub(a: Sequence, b: Sequence) -> List:
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return trim(out)


def pmul(a: Sequence, b: Sequence) -> List:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def pscale(a: Sequence, c) -> List:
    return trim([c * v for v in a])


def pderiv(a: Sequence) -> List:
    return trim([k * a[k] for k in range(1, len(a))])


def peval(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pdivmod_exact(a: Sequence, b: Sequence) -> Tuple[List, List]:
    """Division over Q (Fraction arithmetic); quotient and remainder."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(v) for v in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    if len(r) - 1 < db:
        return [], trim(r)
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lb
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return trim(q), trim(r[:db])


def pdiv_int(a: Sequence[int], b: Sequence[int]) -> List[int] | None:
    """Exact quotient a / b in Z[x], or None when b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [] if not trim(r) else None
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            return None
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    if any(r[:db]):
        return None
    return trim(q)


def pcontent(a: Sequence[int]) -> int:
    g = 0
    for v in a:
        g = math.gcd(g, v)
    return g


def ptaylor_shift(a: Sequence, s) -> List:
    """Coefficients of a(x + s)."""
    out = list(a)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += s * out[j + 1]
    return trim(out)


def pcompose(a: Sequence, b: Sequence) -> List:
    """Coefficients of a(b(x))."""
    acc: List = []
    for c in reversed(a):
        acc = padd(pmul(acc, b), [c])
    return acc


@dataclass(frozen=True)
class IntPoly:
    """Exact integer polynomial in canonical (trimmed) form."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        for v in c:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"IntPoly coefficients must be int, got {v!r}")
        object.__setattr__(self, "coeffs", tuple(trim(c)))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        out = [1]
        for r in roots:
            out = pmul(out, [-r, 1])
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        return pcontent(self.coeffs)

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(tuple(v // g for v in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(pderiv(self.coeffs)))

    def __call__(self, x):
        return peval(self.coeffs, x)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(tuple(padd(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(tuple(psub(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(tuple(pmul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q = pdiv_int(self.coeffs, other.coeffs)
        if q is None:
            raise ValueError(f"{other} does not divide {self} in Z[x]")
        return IntPoly(tuple(q))

    def divides(self, other: "IntPoly") -> bool:
        return pdiv_int(other.coeffs, self.coeffs) is not None

    def shift(self, s: int) -> "IntPoly":
        """The polynomial x -> self(x + s)."""
        return IntPoly(tuple(ptaylor_shift(self.coeffs, s)))

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _coerce(v):
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return IntPoly((v,))
    return NotImplemented


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    """Human-readable expression such as ``x^5 - 5*x + 12``."""
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = pdiv_int(num, cyclotomic(d).coeffs)
    return IntPoly(tuple(num))


def real_root_count(f: IntPoly) -> int:
    """Number of distinct real roots, via a Sturm sequence."""
    if f.degree < 1:
        return 0
    seq = [[Fraction(v) for v in f.coeffs], [Fraction(v) for v in pderiv(f.coeffs)]]
    while seq[-1] and len(seq[-1]) > 1:
        _, r = pdivmod_exact(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-v for v in r])

    def changes(signs):
        s = [v for v in signs if v != 0]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    at_neg = [p[-1] * (-1) ** (len(p) - 1) for p in seq if p]
    at_pos = [p[-1] for p in seq if p]
    return changes(at_neg) - changes(at_pos)
