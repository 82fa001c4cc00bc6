"""Splitting fields of squarefree products and their Galois groups on labeled roots."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..groups import PermGroup, closure
from ..groups.group import small_generating_set
from ..numtheory import ResourceError
from ..polyring import IntPoly, factor_over_rationals, resultant
from .numberfield import (
    FieldElement,
    KPoly,
    NumberField,
    embed,
    factor_over_field,
    kp_divmod,
    kp_eval,
    kp_from_int,
    kp_map,
    primitive_element,
)

DEFAULT_SPLITTING_CAP = 24


@dataclass
class SplittingData:
    field: NumberField
    factors: List[IntPoly]
    roots: List[List[FieldElement]]  # per factor, canonically sorted
    group: PermGroup  # acts on labels 0..N-1, factor blocks in order
    stabilizers: List[PermGroup]
    automorphisms: List[FieldElement]  # images of the generator, one per group element

    @property
    def blocks(self) -> List[List[int]]:
        out, start = [], 0
        for r in self.roots:
            out.append(list(range(start, start + len(r))))
            start += len(r)
        return out

    def to_json(self) -> dict:
        return {
            "field_degree": self.field.degree,
            "minpoly": str(self.field.minpoly),
            "group": {
                "order": self.group.order,
                "degree": self.group.degree,
                "generators": self.group.generators_text(),
            },
            "blocks": [
                {"factor": str(g), "root_count": len(r), "stabilizer_order": A.order}
                for g, r, A in zip(self.factors, self.roots, self.stabilizers)
            ],
        }


def _split_input(f) -> List[IntPoly]:
    if isinstance(f, IntPoly):
        fac = factor_over_rationals(f)
        if any(mult > 1 for _, mult in fac.factors):
            raise ValueError("splitting_data needs a squarefree polynomial")
        return [g for g, _ in fac.factors]
    return sorted(f, key=IntPoly.sort_key)


def splitting_data(f, cap: int = DEFAULT_SPLITTING_CAP, seed: int = 0) -> SplittingData:
    """Splitting field of f (an IntPoly or a list of irreducible monic factors).

    Adjoins a root of the lowest-degree nonlinear factor over the current
    field, re-collapses to a simple extension, and repeats until every factor
    splits.  The Galois group is read off from the roots of the final minimal
    polynomial, each of which induces a permutation of the labeled roots.
    """
    rng = random.Random(seed)
    factors = _split_input(f)
    for g in factors:
        if not g.is_monic() or g.degree < 1:
            raise ValueError(f"factor {g} is not monic of positive degree")
    for a, b in itertools.combinations(factors, 2):
        if resultant(a, b) == 0:
            raise ValueError(f"factors {a} and {b} are not coprime")

    K = NumberField(IntPoly((0, 1)), check=False)
    roots: List[List[FieldElement]] = [[] for _ in factors]
    pending: List[Tuple[int, KPoly]] = []  # (factor index, polynomial over K without known roots)
    for i, g in enumerate(factors):
        pending.append((i, kp_from_int(K, g)))
    adjoined: List[Tuple[int, FieldElement]] = []  # (factor index, root) for each tower step
    # the current generator as an integer combination of the adjoined roots
    gen_coeffs: List[int] = []

    while True:
        nxt: List[Tuple[int, KPoly]] = []
        for i, h in pending:
            for part in factor_over_field(h, K, rng):
                if len(part) == 2:
                    roots[i].append(-part[0])
                else:
                    nxt.append((i, part))
        pending = nxt
        if not pending:
            break
        pending.sort(key=lambda t: (len(t[1]), t[0], [c.sort_key() for c in t[1]]))
        i0, h0 = pending[0]
        try:
            pe = primitive_element(K, h0, cap=cap)
        except ResourceError as exc:
            raise ResourceError(f"{exc}; partial splitting degree reached {K.degree}") from None
        L, old = pe.field, pe.old_gen
        roots = [[embed(r, old) for r in rs] for rs in roots]
        adjoined = [(j, embed(r, old)) for j, r in adjoined]
        new_pending = []
        for i, h in pending:
            hL = kp_map(h, old)
            if i == i0 and h is h0:
                q, rem = kp_divmod(hL, [-pe.new_root, L.one()])
                assert not rem, "adjoined root does not divide its factor"
                roots[i].append(pe.new_root)
                if len(q) > 1:
                    new_pending.append((i, q))
            else:
                new_pending.append((i, hL))
        adjoined.append((i0, pe.new_root))
        # gamma_new = beta + k * gamma_old
        gen_coeffs = [pe.shift * c for c in gen_coeffs] + [1]
        pending = new_pending
        K = L

    for g, rs in zip(factors, roots):
        if len(rs) != g.degree:
            raise AssertionError(f"found {len(rs)} roots of {g}, expected {g.degree}")
    roots = [sorted(rs, key=FieldElement.sort_key) for rs in roots]
    auts, perms = _automorphisms(K, roots, adjoined, gen_coeffs)
    if len(auts) != K.degree:
        raise AssertionError(f"{len(auts)} automorphisms for a field of degree {K.degree}: not normal")
    n_labels = sum(len(r) for r in roots)
    G = closure(small_generating_set(perms, n_labels), cap=K.degree, degree=n_labels)
    if G.order != K.degree:
        raise AssertionError("automorphism permutations do not form a group of the field degree")
    stabs = []
    start = 0
    for rs in roots:
        stabs.append(G.stabilizer(start))
        start += len(rs)
    return SplittingData(K, factors, roots, G, stabs, auts)


def _automorphisms(
    K: NumberField,
    roots: List[List[FieldElement]],
    adjoined: List[Tuple[int, FieldElement]],
    coeffs: List[int],
) -> Tuple[List[FieldElement], List[Tuple[int, ...]]]:
    """Enumerate root-image tuples for the adjoined roots; keep those that define automorphisms.

    K is generated by the adjoined roots, so an automorphism is determined by
    where it sends them, and each must go to a root of the same rational factor.
    The generator gamma is a known integer combination of the adjoined roots.
    """
    labels: Dict[Tuple, int] = {}
    flat: List[FieldElement] = []
    for rs in roots:
        for r in rs:
            labels[r.sort_key()] = len(flat)
            flat.append(r)
    if K.degree == 1:
        return [K.gen()], [tuple(range(len(flat)))]
    used = [t for t, c in enumerate(coeffs) if c]
    check = K.zero()
    for t in used:
        check = check + adjoined[t][1] * coeffs[t]
    if not (check - K.gen()).is_zero():
        raise AssertionError("generator is not the tracked combination of adjoined roots")
    m = [K(v) for v in K.minpoly.coeffs]
    choices = [roots[adjoined[t][0]] for t in used]
    auts, perms = [], []
    seen = set()
    for images in itertools.product(*choices):
        img = K.zero()
        for t, r in zip(used, images):
            img = img + r * coeffs[t]
        key = img.sort_key()
        if key in seen or not kp_eval(m, img).is_zero():
            continue
        seen.add(key)
        perm = []
        for r in flat:
            s = embed(r, img)
            j = labels.get(s.sort_key())
            if j is None:
                raise AssertionError("automorphism maps a root outside the root set")
            perm.append(j)
        auts.append(img)
        perms.append(tuple(perm))
    order = sorted(range(len(perms)), key=lambda t: perms[t])
    return [auts[t] for t in order], [perms[t] for t in order]
