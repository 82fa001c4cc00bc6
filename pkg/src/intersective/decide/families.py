"""Instance generators with analytically known Galois groups."""

from __future__ import annotations

from typing import List

from ..config import Config
from ..groups import closure
from ..numtheory import is_prime, is_square, squarefree_part
from ..polyring import IntPoly, cyclotomic
from .instance import InstanceError, SuppliedGroup, attach_supplied, verify_instance


def _primitive_root(r: int) -> int:
    for g in range(2, r):
        if all(pow(g, (r - 1) // q, r) != 1 for q in _prime_factors(r - 1)):
            return g
    return 1


def _prime_factors(n: int) -> List[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def brandl_group(r: int) -> SuppliedGroup:
    """x -> a x + b on F_r, acting on the roots zeta^c of Phi_r (c != 0) and zeta^j 2^(1/r).

    Labels 0..r-2 hold zeta^1..zeta^(r-1); labels r-1..2r-2 hold zeta^j 2^(1/r), j = 0..r-1.
    The affine map (a, b) sends zeta -> zeta^a and 2^(1/r) -> zeta^b 2^(1/r).
    """
    off = r - 1

    def perm(a: int, b: int):
        img = [0] * (2 * r - 1)
        for c in range(1, r):
            img[c - 1] = (a * c) % r - 1
        for j in range(r):
            img[off + j] = off + (a * j + b) % r
        return tuple(img)

    g = _primitive_root(r)
    G = closure([perm(1, 1), perm(g, 0)], cap=r * (r - 1))
    return SuppliedGroup(G, [list(range(off)), list(range(off, 2 * r - 1))])


def gen_brandl(r: int, config: Config = Config()):
    """(x^r - 2) Phi_r(x) with its order r(r-1) group supplied and Dedekind-sampled."""
    if r < 3 or not is_prime(r):
        raise InstanceError(f"r = {r} must be a prime >= 3")
    inst = verify_instance([IntPoly.x() ** r - 2, cyclotomic(r)])
    return attach_supplied(inst, brandl_group(r))


def quadratic_triple_group() -> SuppliedGroup:
    """C2 x C2 on the roots of x^2 - a, x^2 - b, x^2 - ab (two labels per block).

    Every nontrivial automorphism negates exactly two of sqrt(a), sqrt(b),
    sqrt(ab), since their product is rational; so the group does not depend
    on which block is which.
    """

    def flip(i: int, j: int):
        img = list(range(6))
        for k in (i, j):
            img[2 * k], img[2 * k + 1] = 2 * k + 1, 2 * k
        return tuple(img)

    G = closure([flip(0, 2), flip(1, 2)], cap=4)
    return SuppliedGroup(G, [[0, 1], [2, 3], [4, 5]])


def gen_quadratic_triple(a: int, b: int, config: Config = Config()):
    """(x^2 - a)(x^2 - b)(x^2 - ab) with the Klein four-group supplied."""
    for v in (a, b, a * b):
        if is_square(v):
            raise InstanceError(f"{v} is a square")
    parts = {squarefree_part(a), squarefree_part(b), squarefree_part(a * b)}
    if len(parts) < 3:
        raise InstanceError("a, b, ab must have distinct squarefree parts")
    inst = verify_instance([IntPoly((-a, 0, 1)), IntPoly((-b, 0, 1)), IntPoly((-a * b, 0, 1))])
    return attach_supplied(inst, quadratic_triple_group())
