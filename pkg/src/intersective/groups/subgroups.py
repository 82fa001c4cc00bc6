"""Subgroup classes, covering by conjugates, joint cores, minimal covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..numtheory import ResourceError
from .group import NotASubgroupError, PermGroup, extend_closure
from .perm import Perm, conjugate, format_cycles, mul, order

DEFAULT_ENUM_CAP = 1000


@dataclass
class SubgroupClass:
    rep: PermGroup
    conjugates: int
    is_maximal: bool = False
    members: List[FrozenSet[Perm]] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return self.rep.order

    @property
    def is_normal(self) -> bool:
        return self.conjugates == 1


@dataclass
class CoverReport:
    covered: bool
    witness: Optional[Perm]
    per_subgroup: List[int]

    def to_json(self) -> dict:
        out = {"covered": self.covered, "per_subgroup": self.per_subgroup}
        if self.witness is not None:
            out["witness"] = format_cycles(self.witness)
        return out


@dataclass
class MinCover:
    m: int
    classes: List[SubgroupClass]
    maximal_only: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "maximal_only": self.maximal_only,
            "witnesses": [
                {
                    "order": c.order,
                    "conjugates": c.conjugates,
                    "maximal": c.is_maximal,
                    "generators": c.rep.generators_text(),
                }
                for c in self.classes
            ],
        }


def _check_subs(G: PermGroup, subs: Sequence[PermGroup]) -> None:
    for A in subs:
        if not A.is_subgroup_of(G):
            raise NotASubgroupError("input is not a subgroup of G")
        elems = A.element_set
        if G.identity not in elems or any(mul(a, b) not in elems for a in elems for b in elems):
            raise NotASubgroupError("input is not closed under multiplication")


def conjugate_union_mask(G: PermGroup, A: PermGroup) -> int:
    """Bitmask of the union of all conjugates of A.

    The union of the conjugates of A is the union of the G-classes meeting A.
    """
    masks = G.class_masks
    cls = G.class_of
    hit = {cls[a] for a in A.elements}
    out = 0
    for i in hit:
        out |= masks[i]
    return out


def covers(G: PermGroup, subs: Sequence[PermGroup]) -> CoverReport:
    """Does every element of G lie in a conjugate of some subgroup in subs?"""
    _check_subs(G, subs)
    union = 0
    per = []
    for A in subs:
        m = conjugate_union_mask(G, A)
        per.append(bin(m).count("1"))
        union |= m
    full = (1 << G.order) - 1
    if union == full:
        return CoverReport(True, None, per)
    missing = full & ~union
    idx = (missing & -missing).bit_length() - 1
    return CoverReport(False, G.elements[idx], per)


def joint_core(G: PermGroup, subs: Sequence[PermGroup]) -> FrozenSet[Perm]:
    """Intersection of all conjugates of all subgroups in subs."""
    _check_subs(G, subs)
    out = frozenset(G.elements)
    for A in subs:
        out &= G.core(A)
    return out


def joint_core_trivial(G: PermGroup, subs: Sequence[PermGroup]) -> bool:
    return len(joint_core(G, subs)) == 1


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while n % p:
        p += 1
    while n % p == 0:
        n //= p
    return n == 1


def subgroup_classes(G: PermGroup, min_order: int = 1, cap: int = DEFAULT_ENUM_CAP) -> List[SubgroupClass]:
    """One representative per conjugacy class of subgroups, by cyclic extension.

    Every group is generated by elements of prime-power order, so adjoining
    such elements one at a time to class representatives reaches every class.
    Representatives are returned sorted by (order, sorted elements).
    """
    if G.order > cap:
        raise ResourceError(f"|G| = {G.order} exceeds subgroup enumeration cap {cap}")
    ppo = [g for g in G.elements if _is_prime_power(order(g))]
    trivial = PermGroup(G.degree, [], [G.identity])
    registry: Dict[FrozenSet[Perm], int] = {}
    classes: List[SubgroupClass] = []

    def register(H: PermGroup) -> bool:
        key = H.element_set
        if key in registry:
            return False
        members = set()
        for x in G.elements:
            members.add(frozenset(conjugate(x, a) for a in H.elements))
        for c in members:
            registry[c] = len(classes)
        classes.append(SubgroupClass(H, len(members), members=sorted(members, key=sorted)))
        return True

    register(trivial)
    i = 0
    while i < len(classes):
        H = classes[i].rep
        proper_overgroup = False
        tried = set()
        for g in ppo:
            if g in H.element_set:
                continue
            coset = min(mul(h, g) for h in H.elements)
            if coset in tried:
                continue
            tried.add(coset)
            K = extend_closure(H, g, cap=G.order)
            if K.order < G.order:
                proper_overgroup = True
            register(K)
        classes[i].is_maximal = H.order < G.order and not proper_overgroup
        i += 1

    classes.sort(key=lambda c: (c.order, c.rep.elements))
    return [c for c in classes if c.order >= min_order]


def cover_bound(G: PermGroup, c: SubgroupClass) -> int:
    """Upper bound [G:N(A)](|A|-1) + 1 on the size of the union of conjugates."""
    return c.conjugates * (c.order - 1) + 1


def min_cover_m(
    G: PermGroup,
    max_m: int,
    cap: int = DEFAULT_ENUM_CAP,
    classes: Optional[List[SubgroupClass]] = None,
) -> Optional[MinCover]:
    """Least m <= max_m such that m proper subgroup classes cover G with trivial joint core.

    Any cover extends to a cover by maximal overgroups, so maximal classes are
    searched first.  Enlarging subgroups can enlarge the joint core (e.g. when
    the Frattini subgroup is nontrivial), so when no maximal choice of size m
    works the search falls back to all proper classes for that m.  Candidate
    sets are pruned with the cover-size bound
    sum_i [G:N(A_i)](|A_i|-1) + 1 >= |G|, which for m = 2 implies
    [G:A_1] + [G:A_2] <= |G| + 1.
    """
    if classes is None:
        classes = subgroup_classes(G, cap=cap)
    proper = [c for c in classes if c.order < G.order]
    if not proper:
        return None
    full = (1 << G.order) - 1
    id_mask = 1 << G.index[G.identity]
    info = []
    for c in proper:
        cov = conjugate_union_mask(G, c.rep)
        core = G.mask(G.core(c.rep))
        info.append((c, cov, core, bin(cov).count("1")))
    # larger covers first so the first hit is found early; ties broken by class order
    info.sort(key=lambda t: (-t[3], t[0].order, t[0].rep.elements))
    maximal = [t for t in info if t[0].is_maximal]

    for m in range(1, max_m + 1):
        for pool, is_max in ((maximal, True), (info, False)):
            hit = _search(pool, m, full, id_mask, G.order)
            if hit is not None:
                chosen = sorted((t[0] for t in hit), key=lambda c: (-c.order, c.rep.elements))
                return MinCover(m, chosen, is_max)
    return None


def _search(pool, m, full, id_mask, n):
    sizes = [t[3] for t in pool]

    def rec(start, depth, cov, core, chosen):
        if depth == m:
            if cov == full and core == id_mask:
                return list(chosen)
            return None
        slots = m - depth
        covered = bin(cov).count("1")
        for i in range(start, len(pool) - slots + 1):
            # sizes are descending: the next `slots` entries bound any completion
            if covered + sum(sizes[i : i + slots]) < n:
                break
            c, cv, cr, _ = pool[i]
            chosen.append(pool[i])
            out = rec(i + 1, depth + 1, cov | cv, core & cr, chosen)
            chosen.pop()
            if out is not None:
                return out
        return None

    return rec(0, 0, 0, full, [])
