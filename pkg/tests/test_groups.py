import itertools

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from intersective.groups import (
    IntransitiveGroupError,
    PermGroup,
    affine_frobenius,
    alternating_group,
    closure,
    cover_bound,
    covers,
    cyclic_group,
    dihedral_group,
    frobenius_catalog,
    frobenius_structure,
    joint_core,
    joint_core_trivial,
    lemma24_check,
    min_cover_m,
    parse_cycles,
    parse_generators,
    small_group_catalog,
    subgroup_classes,
    symmetric_group,
)
from intersective.groups.perm import conjugate, format_cycles, mul
from intersective.numtheory import ResourceError

CATALOG = small_group_catalog(24)


def gens(*texts, degree=None):
    return parse_generators(texts, degree=degree)


def naive_union(G, subs):
    """Elements of G lying in some conjugate of some subgroup (direct definition)."""
    out = set()
    for g in G.elements:
        for A in subs:
            if any(conjugate(x, g) in A.element_set for x in G.elements):
                out.add(g)
                break
    return out


def all_subgroups(G):
    """Every subgroup, by repeatedly adjoining single elements (independent of the class search)."""
    found = {frozenset([G.identity])}
    frontier = list(found)
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if g in H:
                    continue
                K = frozenset(closure(list(H) + [g], degree=G.degree).elements)
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return found


def conj_classes_of_subgroups(G, subs):
    classes = []
    seen = set()
    for H in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if H in seen:
            continue
        orbit = {frozenset(conjugate(x, h) for h in H) for x in G.elements}
        seen |= orbit
        classes.append((len(H), len(orbit)))
    return sorted(classes)


# --- permutations and closure ----------------------------------------------


def test_cycle_notation_roundtrip():
    p = parse_cycles("(1 2 3)(4 5)", degree=6)
    assert p == (1, 2, 0, 4, 3, 5)
    assert format_cycles(p) == "(1 2 3)(4 5)"
    assert mul(p, p) == parse_cycles("(1 3 2)", degree=6)


@pytest.mark.parametrize(
    "texts,order",
    [(("(1 2 3 4 5)", "(2 3 5 4)"), 20), (("(1 2)",), 2), (("(1 2 3 4 5)", "(2 5)(3 4)"), 10)],
)
def test_closure_examples(texts, order):
    assert closure(gens(*texts)).order == order


def test_closure_cap():
    with pytest.raises(ResourceError):
        closure(symmetric_group(7).generators, cap=1000)


def test_catalog_orders_against_sympy():
    for name, G in CATALOG.items():
        sg = PermutationGroup([Permutation(list(g)) for g in G.generators] or [Permutation(list(G.identity))])
        assert sg.order() == G.order, name
        assert sg.is_cyclic == G.is_cyclic(), name
        assert sg.is_abelian == G.is_abelian(), name


def test_named_groups():
    assert symmetric_group(4).order == 24
    assert alternating_group(5).order == 60
    assert cyclic_group(7).is_cyclic()
    assert dihedral_group(5).order == 10


# --- subgroup classes -------------------------------------------------------


def test_subgroup_class_examples():
    S3 = symmetric_group(3)
    assert [c.order for c in subgroup_classes(S3)] == [1, 2, 3, 6]
    V = CATALOG["C2xC2"]
    cls = subgroup_classes(V)
    assert len(cls) == 5 and all(c.conjugates == 1 for c in cls)
    A4 = alternating_group(4)
    orders = [c.order for c in subgroup_classes(A4)]
    assert orders == [1, 2, 3, 4, 12]


@pytest.mark.parametrize("name", sorted(n for n, G in CATALOG.items() if G.order <= 24 and not G.is_cyclic()))
def test_subgroup_classes_match_brute_force(name):
    G = CATALOG[name]
    cls = subgroup_classes(G)
    assert sorted((c.order, c.conjugates) for c in cls) == conj_classes_of_subgroups(G, all_subgroups(G))


def test_maximal_flags():
    S4 = symmetric_group(4)
    maximal = sorted(c.order for c in subgroup_classes(S4) if c.is_maximal)
    assert maximal == [6, 8, 12]


def test_enum_cap():
    with pytest.raises(ResourceError):
        subgroup_classes(symmetric_group(5), cap=100)


# --- covering and joint core ------------------------------------------------


def test_covers_examples():
    S3 = symmetric_group(3)
    T = S3.subgroup([S3.identity, parse_cycles("(1 2)", degree=3)])
    A3 = S3.subgroup([S3.identity, parse_cycles("(1 2 3)", degree=3), parse_cycles("(1 3 2)", degree=3)])
    assert covers(S3, [T, A3]).covered
    assert joint_core_trivial(S3, [T, A3])

    C4 = cyclic_group(4)
    sq = mul(C4.generators[0], C4.generators[0])
    C2 = C4.subgroup([C4.identity, sq])
    rep = covers(C4, [C2])
    assert not rep.covered
    assert rep.witness in (C4.generators[0], mul(sq, C4.generators[0]))

    F20 = closure(gens("(1 2 3 4 5)", "(2 3 5 4)"))
    H = F20.stabilizer(0)
    Q = F20.subgroup(closure(gens("(1 2 3 4 5)")).elements)
    assert H.order == 4
    assert covers(F20, [H, Q]).covered


def test_joint_core_examples():
    V = CATALOG["C2xC2"]
    one = next(c.rep for c in subgroup_classes(V) if c.order == 2)
    assert not joint_core_trivial(V, [one])
    assert joint_core(V, [one]) == one.element_set


def test_covers_rejects_non_subgroups():
    S3 = symmetric_group(3)
    bogus = PermGroup(3, [], [S3.identity, parse_cycles("(1 2 3)", degree=3)])
    with pytest.raises(ValueError):
        covers(S3, [bogus])


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_covering_agrees_with_definition(name):
    G = CATALOG[name]
    cls = [c.rep for c in subgroup_classes(G)]
    for A in cls:
        rep = covers(G, [A])
        union = naive_union(G, [A])
        assert rep.covered == (len(union) == G.order)
        if not rep.covered:
            assert rep.witness not in union
    for A, B in itertools.combinations(cls, 2):
        assert covers(G, [A, B]).covered == (len(naive_union(G, [A, B])) == G.order)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_cover_bound(name):
    G = CATALOG[name]
    for c in subgroup_classes(G):
        assert len(naive_union(G, [c.rep])) <= cover_bound(G, c)


# --- minimal covers ---------------------------------------------------------


def test_min_cover_examples():
    assert min_cover_m(CATALOG["C2xC2"], 4).m == 3
    assert min_cover_m(symmetric_group(3), 3).m == 2
    for n in (1, 2, 5, 12):
        assert min_cover_m(cyclic_group(n), 5) is None


@pytest.mark.parametrize("name", sorted(n for n, G in CATALOG.items() if G.order <= 12))
def test_min_cover_is_minimal(name):
    G = CATALOG[name]
    res = min_cover_m(G, 5)
    cls = [c.rep for c in subgroup_classes(G) if c.order < G.order]
    if G.is_cyclic():
        assert res is None
        return
    assert res is not None
    chosen = [c.rep for c in res.classes]
    assert len(naive_union(G, chosen)) == G.order
    assert joint_core_trivial(G, chosen)
    for k in range(1, res.m):
        for combo in itertools.combinations(cls, k):
            assert not (len(naive_union(G, combo)) == G.order and joint_core_trivial(G, list(combo)))


# --- Frobenius groups -------------------------------------------------------


def test_frobenius_examples():
    D5 = closure(gens("(1 2 3 4 5)", "(2 5)(3 4)"))
    st = frobenius_structure(D5)
    assert (st.kernel.order, st.complement.order) == (5, 2)
    assert st.checks["kernel_abelian"]

    st = frobenius_structure(alternating_group(4))
    assert (st.kernel.order, st.complement.order) == (4, 3)
    assert st.checks["kernel_nilpotent"]

    assert frobenius_structure(symmetric_group(4)) is None
    assert frobenius_structure(cyclic_group(5)) is None


def test_frobenius_rejects_intransitive():
    G = closure(gens("(1 2)(3 4 5)"))
    with pytest.raises(IntransitiveGroupError):
        frobenius_structure(G)


def test_lemma24_examples():
    D5 = closure(gens("(1 2 3 4 5)", "(2 5)(3 4)"))
    rep = lemma24_check(D5)
    assert rep.passed and rep.trivial_meet_classes == [1, 2]
    F20 = closure(gens("(1 2 3 4 5)", "(2 3 5 4)"))
    rep = lemma24_check(F20)
    assert rep.passed and rep.trivial_meet_classes == [1, 2, 4]
    rep = lemma24_check(alternating_group(4))
    assert rep.passed and rep.trivial_meet_classes == [1, 3]


def test_lemma24_rejects_non_frobenius():
    with pytest.raises(ValueError):
        lemma24_check(symmetric_group(4))


def test_catalog_small():
    cat = frobenius_catalog(30)
    orders = {e.group.order for e in cat}
    assert {6, 10, 12, 14, 18, 20, 21}.issubset(orders)
    for e in cat:
        st = frobenius_structure(e.group)
        assert (st.kernel.order, st.complement.order) == (e.kernel_order, e.complement_order)
        assert e.group.order == e.kernel_order * e.complement_order


def test_affine_groups():
    G = affine_frobenius(5, 4)
    assert G.order == 20
    G = affine_frobenius(9, 8)
    st = frobenius_structure(G)
    assert G.order == 72 and st.kernel.order == 9 and st.checks["kernel_abelian"]
    assert not st.kernel.is_cyclic()


def test_catalog_keeps_both_order8_complements():
    names = {e.name for e in frobenius_catalog(72)}
    assert {"F9:C8", "F9:Q8"} <= names
