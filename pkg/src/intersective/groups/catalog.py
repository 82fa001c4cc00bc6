"""Small permutation groups for group-side checks, keyed by a readable name."""

from __future__ import annotations

from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from .frobenius import affine_frobenius
from .group import PermGroup, alternating_group, closure, cyclic_group, dihedral_group, symmetric_group
from .perm import Perm


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the point sets."""
    n, m = A.degree, B.degree
    gens = [tuple(a) + tuple(range(n, n + m)) for a in A.generators]
    gens += [tuple(range(n)) + tuple(n + b for b in bg) for bg in B.generators]
    return closure(gens, cap=A.order * B.order, degree=n + m)


def regular_group(elements: Sequence, op: Callable) -> PermGroup:
    """Left regular representation of a finite group given by its multiplication."""
    idx = {e: i for i, e in enumerate(elements)}
    perms = [tuple(idx[op(g, h)] for h in elements) for g in elements]
    return closure(perms, cap=len(elements), degree=len(elements))


def dicyclic_group(n: int) -> PermGroup:
    """Dic_n of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>.

    Elements (k, s) mean a^k x^s.
    """
    N = 2 * n

    def op(u, v):
        (k, s), (l, t) = u, v
        if s == 0:
            return ((k + l) % N, t)
        # x a^l = a^-l x
        k2 = (k - l) % N
        if t == 0:
            return (k2, 1)
        return ((k2 + n) % N, 0)

    return regular_group([(k, s) for s in (0, 1) for k in range(N)], op)


def sl23() -> PermGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [v for v in product(range(3), repeat=2) if v != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(m):
        return tuple(idx[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)] for x, y in vecs)

    return closure([act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))], cap=24)


def _abelian_invariants(limit: int) -> List[Tuple[int, ...]]:
    """Invariant factor lists d1 | d2 | ... with at least two factors and product <= limit."""
    out = []

    def rec(prefix, prod_):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        last = prefix[-1] if prefix else None
        for d in range(2, limit + 1):
            if prod_ * d > limit:
                break
            if last is not None and d % last:
                continue
            rec(prefix + [d], prod_ * d)

    rec([], 1)
    return sorted(out, key=lambda t: (_prod(t), t))


def _prod(t):
    out = 1
    for v in t:
        out *= v
    return out


def small_group_catalog(max_order: int = 24) -> Dict[str, PermGroup]:
    """A representative (not exhaustive) list of groups of order <= max_order.

    Includes every cyclic group and every abelian group, dihedral and dicyclic
    families, and a handful of nonabelian groups of orders 12 to 24.
    """
    cat: Dict[str, PermGroup] = {}
    for n in range(1, max_order + 1):
        cat[f"C{n}"] = cyclic_group(n) if n > 1 else closure([], degree=1)
    for inv in _abelian_invariants(max_order):
        G = cyclic_group(inv[0])
        for d in inv[1:]:
            G = direct_product(G, cyclic_group(d))
        cat["x".join(f"C{d}" for d in inv)] = G
    for n in range(3, max_order // 2 + 1):
        cat[f"D{2 * n}"] = dihedral_group(n)
    for n in range(2, max_order // 4 + 1):
        cat[f"Dic{4 * n}"] = dicyclic_group(n)
    extra: List[Tuple[str, int, Callable[[], PermGroup]]] = [
        ("A4", 12, lambda: alternating_group(4)),
        ("S4", 24, lambda: symmetric_group(4)),
        ("SL(2,3)", 24, sl23),
        ("F20", 20, lambda: affine_frobenius(5, 4)),
        ("F21", 21, lambda: affine_frobenius(7, 3)),
        ("S3xC3", 18, lambda: direct_product(symmetric_group(3), cyclic_group(3))),
        ("C3^2:C2", 18, lambda: affine_frobenius(9, 2)),
        ("D8xC2", 16, lambda: direct_product(dihedral_group(4), cyclic_group(2))),
        ("Q8xC2", 16, lambda: direct_product(dicyclic_group(2), cyclic_group(2))),
        ("S3xC4", 24, lambda: direct_product(symmetric_group(3), cyclic_group(4))),
        ("A4xC2", 24, lambda: direct_product(alternating_group(4), cyclic_group(2))),
        ("D12xC2", 24, lambda: direct_product(dihedral_group(6), cyclic_group(2))),
    ]
    for name, order_, build in extra:
        if order_ <= max_order:
            cat[name] = build()
    return cat
