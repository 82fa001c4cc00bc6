"""Finite permutation groups stored as complete sorted element lists."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..numtheory import ResourceError
from .perm import Perm, conjugate, cycle_type, fixed_points, format_cycles, identity, inverse, mul, order

DEFAULT_ORDER_CAP = 10080


class NotASubgroupError(ValueError):
    pass


class PermGroup:
    """A permutation group on points 0..degree-1 with every element listed."""

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Iterable[Perm]):
        self.degree = degree
        self.generators: Tuple[Perm, ...] = tuple(generators)
        self.elements: Tuple[Perm, ...] = tuple(sorted(elements))
        self.order = len(self.elements)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def __contains__(self, g: Perm) -> bool:
        return g in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def element_set(self) -> FrozenSet[Perm]:
        return frozenset(self.elements)

    @cached_property
    def index(self) -> Dict[Perm, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def mask(self, elems: Iterable[Perm]) -> int:
        """Bitmask over this group's sorted element list."""
        idx = self.index
        out = 0
        for g in elems:
            out |= 1 << idx[g]
        return out

    def elements_of_mask(self, mask: int) -> List[Perm]:
        return [g for i, g in enumerate(self.elements) if mask >> i & 1]

    @cached_property
    def conjugacy_classes(self) -> List[Tuple[Perm, ...]]:
        """Classes in order of their least element; each class sorted."""
        seen: Dict[Perm, int] = {}
        out: List[Tuple[Perm, ...]] = []
        gens = self.generators or (self.identity,)
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            queue = deque([g])
            while queue:
                a = queue.popleft()
                for x in gens:
                    b = conjugate(x, a)
                    if b not in orbit:
                        orbit.add(b)
                        queue.append(b)
            cls = tuple(sorted(orbit))
            for a in cls:
                seen[a] = len(out)
            out.append(cls)
        return out

    @cached_property
    def class_of(self) -> Dict[Perm, int]:
        return {a: i for i, cls in enumerate(self.conjugacy_classes) for a in cls}

    @cached_property
    def class_masks(self) -> List[int]:
        return [self.mask(cls) for cls in self.conjugacy_classes]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        return any(order(g) == self.order for g in self.elements)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def orbit(self, point: int) -> List[int]:
        seen = {point}
        queue = deque([point])
        while queue:
            i = queue.popleft()
            for g in self.generators:
                j = g[i]
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return sorted(seen)

    def orbits(self) -> List[List[int]]:
        out = []
        seen = set()
        for i in range(self.degree):
            if i not in seen:
                o = self.orbit(i)
                seen.update(o)
                out.append(o)
        return out

    def stabilizer(self, point: int) -> "PermGroup":
        return self.subgroup([g for g in self.elements if g[point] == point])

    def subgroup(self, elems: Iterable[Perm], check: bool = True) -> "PermGroup":
        """Wrap a subset known (or checked) to be a subgroup."""
        elems = sorted(set(elems))
        if check:
            s = set(elems)
            if not s <= self.element_set:
                raise NotASubgroupError("elements outside the ambient group")
            if self.identity not in s:
                raise NotASubgroupError("identity missing")
            try:
                gens = small_generating_set(elems, self.degree)
                generated = closure(gens, cap=len(s), degree=self.degree).element_set
            except ResourceError:
                raise NotASubgroupError("not closed under multiplication") from None
            if generated != s:
                raise NotASubgroupError("not closed under multiplication")
        else:
            gens = small_generating_set(elems, self.degree)
        return PermGroup(self.degree, gens, elems)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def core(self, sub: "PermGroup") -> FrozenSet[Perm]:
        """Largest normal subgroup of self inside sub: the union of classes contained in it."""
        s = sub.element_set
        out = set()
        for cls in self.conjugacy_classes:
            if cls[0] in s and all(a in s for a in cls):
                out.update(cls)
        return frozenset(out)

    def is_normal(self, sub: "PermGroup") -> bool:
        return len(self.core(sub)) == sub.order

    def conjugates_of(self, sub: "PermGroup") -> List[FrozenSet[Perm]]:
        """Distinct conjugates x sub x^-1, sorted by their sorted element lists."""
        seen = set()
        for x in self.elements:
            c = frozenset(conjugate(x, a) for a in sub.elements)
            seen.add(c)
        return sorted(seen, key=lambda s: sorted(s))

    def element_cycle_types(self) -> set:
        return {cycle_type(g) for g in self.elements}

    def generators_text(self) -> List[str]:
        return [format_cycles(g) for g in self.generators]


def closure(generators: Sequence[Perm], cap: int = DEFAULT_ORDER_CAP, degree: Optional[int] = None) -> PermGroup:
    """Breadth-first closure of the generators under composition."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("generators of different degrees")
    e = identity(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = mul(g, a)
            if b not in seen:
                seen.add(b)
                if len(seen) > cap:
                    raise ResourceError(f"group order exceeds cap {cap}")
                queue.append(b)
    return PermGroup(degree, [g for g in gens if g != e], seen)


def extend_closure(base: PermGroup, g: Perm, cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    """The group generated by a group and one more element.

    Left multiplication permutes the left cosets rH, so the closure is grown
    one coset at a time.
    """
    if g in base.element_set:
        return base
    gens = list(base.generators) + [g]
    H = base.elements
    seen = set(H)
    reps = deque([base.identity])
    while reps:
        r = reps.popleft()
        for x in gens:
            y = mul(x, r)
            if y not in seen:
                seen.update(mul(y, h) for h in H)
                if len(seen) > cap:
                    raise ResourceError(f"group order exceeds cap {cap}")
                reps.append(y)
    return PermGroup(base.degree, gens, seen)


def small_generating_set(elems: Sequence[Perm], degree: int) -> List[Perm]:
    """Greedy generating set: add the first element not yet generated."""
    target = set(elems)
    gens: List[Perm] = []
    current = {identity(degree)}
    for g in sorted(target, key=lambda a: (-order(a), a)):
        if g in current:
            continue
        gens.append(g)
        current = set(closure(gens, cap=len(target), degree=degree).elements)
        if len(current) == len(target):
            break
    return gens


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return closure([], degree=1)
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return closure(gens, cap=10**7)


def alternating_group(n: int) -> PermGroup:
    gens = []
    for k in range(2, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(tuple(img))
    return closure(gens, cap=10**7, degree=n)


def cyclic_group(n: int) -> PermGroup:
    return closure([tuple(list(range(1, n)) + [0])], degree=n)


def dihedral_group(n: int) -> PermGroup:
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((-i) % n for i in range(n))
    return closure([rot, ref])


def restrict(G: PermGroup, points: Sequence[int]) -> PermGroup:
    """The action of G on an invariant set of points, relabeled 0..len(points)-1."""
    pos = {v: i for i, v in enumerate(points)}
    if len(pos) != len(points):
        raise ValueError("repeated point")
    gens = []
    for g in G.generators:
        try:
            gens.append(tuple(pos[g[v]] for v in points))
        except KeyError:
            raise ValueError("points are not invariant under the group") from None
    return closure(gens, cap=G.order, degree=len(points))
