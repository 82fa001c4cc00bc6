import itertools
import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.numberfields.galoisgroups import galois_group

from intersective.groups import frobenius_structure, joint_core_trivial, restrict
from intersective.numtheory import ResourceError, iter_primes
from intersective.polyring import IntPoly, cycle_type, discriminant, is_irreducible, parse_poly
from intersective.splitfield import (
    NumberField,
    factor_over_field,
    norm,
    primitive_element,
    splitting_data,
)
from intersective.splitfield.numberfield import kp_eval, kp_mul

X = sympy.Symbol("x")


def P(text):
    return parse_poly(text)


def kpoly(K, coeffs):
    return [K(c) for c in coeffs]


# --- number field arithmetic ------------------------------------------------

CUBIC = NumberField(P("x^3 - 2"))
QUINTIC = NumberField(P("x^5 - 5*x + 12"))


def elements(K):
    return st.lists(
        st.fractions(min_value=-20, max_value=20, max_denominator=7), min_size=1, max_size=K.degree
    ).map(K)


@settings(max_examples=100, deadline=None)
@given(elements(QUINTIC), elements(QUINTIC), elements(QUINTIC))
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QUINTIC.zero()
    if not a.is_zero():
        assert a * a.inverse() == QUINTIC.one()
        assert (b / a) * a == b


def test_generator_relation():
    t = CUBIC.gen()
    assert t**3 == CUBIC(2)
    assert (t + 1).inverse() * (t + 1) == CUBIC.one()
    assert CUBIC(Fraction(1, 2)) * 2 == CUBIC.one()


def test_reducible_minpoly_rejected():
    with pytest.raises(ValueError):
        NumberField(P("x^2 - 4"))
    with pytest.raises(ValueError):
        NumberField(P("2*x^2 - 1"))


def test_norm_of_linear_is_minpoly():
    # N(x - theta) = m(x)
    t = CUBIC.gen()
    assert norm([-t, CUBIC.one()]) == P("x^3 - 2")
    t5 = QUINTIC.gen()
    assert norm([-t5, QUINTIC.one()]) == P("x^5 - 5*x + 12")


def test_norm_against_sympy_resultant():
    K = NumberField(P("x^2 - 2"))
    t = K.gen()
    a = [K(3) - t, K.zero(), K.one()]  # x^2 + 3 - sqrt2
    y = sympy.Symbol("y")
    expected = sympy.Poly(sympy.resultant(y**2 - 2, X**2 + 3 - y, y), X)
    assert norm(a).coeffs == tuple(int(v) for v in reversed(expected.all_coeffs()))


# --- factoring over K ---------------------------------------------------------


def test_factor_over_field_examples():
    Ki = NumberField(P("x^2 + 1"))
    fs = factor_over_field(kpoly(Ki, [1, 0, 1]), Ki)
    assert sorted(len(f) - 1 for f in fs) == [1, 1]
    i = Ki.gen()
    assert sorted(str(f[0]) for f in fs) == sorted([str(i), str(-i)])

    fs = factor_over_field(kpoly(CUBIC, [-2, 0, 0, 1]), CUBIC)
    assert sorted(len(f) - 1 for f in fs) == [1, 2]
    lin = next(f for f in fs if len(f) == 2)
    assert -lin[0] == CUBIC.gen()

    fs = factor_over_field(kpoly(CUBIC, [1, 1, 1]), CUBIC)
    assert len(fs) == 1 and len(fs[0]) == 3


@pytest.mark.parametrize(
    "text,linear", [("x^4 - 10*x^2 + 1", 4), ("x^3 - 3*x - 1", 3), ("x^4 + 1", 4), ("x^6 + 3", 6), ("x^3 - 2", 1)]
)
def test_factor_minpoly_over_own_field(text, linear):
    f = P(text)
    K = NumberField(f)
    fs = factor_over_field(kpoly(K, f.coeffs), K)
    prod = [K.one()]
    for g in fs:
        prod = kp_mul(prod, g)
    assert prod == kpoly(K, f.coeffs)
    roots = [-g[0] for g in fs if len(g) == 2]
    assert len(roots) == linear
    assert all(kp_eval(kpoly(K, f.coeffs), r).is_zero() for r in roots)


# --- primitive elements -----------------------------------------------------


def test_primitive_element_examples():
    Q = NumberField(P("x"))
    pe = primitive_element(Q, kpoly(Q, [1, 0, 1]))
    assert pe.field.minpoly == P("x^2 + 1") and pe.shift == 0

    K = NumberField(P("x^2 - 2"))
    pe = primitive_element(K, kpoly(K, [-3, 0, 1]))
    assert pe.field.minpoly == P("x^4 - 10*x^2 + 1")
    assert pe.shift == 1
    assert pe.old_gen**2 == pe.field(2)
    assert pe.new_root**2 == pe.field(3)

    pe = primitive_element(CUBIC, kpoly(CUBIC, [1, 1, 1]))
    assert pe.field.degree == 6
    assert pe.old_gen**3 == pe.field(2)
    w = pe.new_root
    assert w * w + w + 1 == pe.field.zero()


def test_primitive_element_cap():
    with pytest.raises(ResourceError):
        primitive_element(CUBIC, kpoly(CUBIC, [1, 1, 1]), cap=5)


# --- splitting fields -------------------------------------------------------


def check_splitting_invariants(sd, factors):
    G = sd.group
    assert G.order == sd.field.degree
    assert sorted(map(tuple, G.orbits())) == sorted(map(tuple, sd.blocks))
    for g, b, A in zip(sd.factors, sd.blocks, sd.stabilizers):
        assert len(b) == g.degree
        assert G.order == A.order * g.degree
    assert joint_core_trivial(G, sd.stabilizers)
    # each labeled root is a root of its factor
    for g, rs in zip(sd.factors, sd.roots):
        for r in rs:
            assert kp_eval(kpoly(sd.field, g.coeffs), r).is_zero()
    # Dedekind: factorization pattern mod p is realized by one group element
    f = IntPoly((1,))
    for g in sd.factors:
        f = f * g
    realized = set()
    for s in G.elements:
        realized.add(tuple(tuple(sorted(_cycle_lengths(s, b))) for b in sd.blocks))
    d = discriminant(f)
    primes = [p for p in itertools.islice(iter_primes(), 60) if d % p][:25]
    for p in primes:
        assert tuple(tuple(sorted(cycle_type(g, p))) for g in sd.factors) in realized


def _cycle_lengths(s, block):
    seen, out = set(), []
    for v in block:
        if v in seen:
            continue
        n, w = 0, v
        while w not in seen:
            seen.add(w)
            w = s[w]
            n += 1
        out.append(n)
    return out


def test_splitting_x2_plus_1():
    sd = splitting_data([P("x^2+1")])
    assert sd.field.degree == 2 and sd.group.order == 2
    check_splitting_invariants(sd, [P("x^2+1")])


def test_splitting_brandl3():
    fs = [P("x^3-2"), P("x^2+x+1")]
    sd = splitting_data(fs)
    assert sd.field.degree == 6 and sd.group.order == 6
    assert not sd.group.is_abelian()
    orders = {str(g): A.order for g, A in zip(sd.factors, sd.stabilizers)}
    assert orders == {"x^3 - 2": 2, "x^2 + x + 1": 3}
    check_splitting_invariants(sd, fs)


def test_splitting_brandl5(brandl5_splitting):
    sd, _ = brandl5_splitting
    assert sd.field.degree == 20 and sd.group.order == 20
    check_splitting_invariants(sd, sd.factors)
    block = sd.blocks[[str(g) for g in sd.factors].index("x^5 - 2")]
    st_ = frobenius_structure(restrict(sd.group, block))
    assert st_.kernel.order == 5 and st_.complement.order == 4


def test_splitting_cap_reports_partial_degree():
    with pytest.raises(ResourceError, match="partial splitting degree reached"):
        splitting_data([P("x^5-2"), P("x^4+x^3+x^2+x+1")], cap=10)


def test_splitting_deterministic():
    fs = [P("x^2-2"), P("x^2-17"), P("x^2-34")]
    a = json.dumps(splitting_data(fs).to_json(), sort_keys=True)
    b = json.dumps(splitting_data(list(reversed(fs)), seed=3).to_json(), sort_keys=True)
    assert a == b
    sd = splitting_data(fs)
    assert sd.group.order == 4 and sd.group.is_abelian() and not sd.group.is_cyclic()


def test_splitting_rejects_repeated_factor():
    with pytest.raises(ValueError):
        splitting_data(P("(x^2+1)^2"))


@pytest.mark.parametrize(
    "text",
    ["x^3 - 2", "x^3 - 3*x - 1", "x^4 - 2", "x^4 + 1", "x^4 - 10*x^2 + 1", "x^4 + x^3 + x^2 + x + 1", "x^4 - 4*x^2 + 2", "x^4 + 9*x^3 - 10*x^2 + 8*x + 9"],
)
def test_group_order_matches_sympy(text):
    f = P(text)
    G, _ = galois_group(sympy.Poly(list(reversed(f.coeffs)), X), by_name=False)
    sd = splitting_data([f])
    assert sd.group.order == G.order()
    assert sd.group.is_abelian() == G.is_abelian
    check_splitting_invariants(sd, [f])


def test_random_irreducibles_against_sympy():
    rng = random.Random(99)
    done = 0
    while done < 6:
        d = rng.randint(2, 4)
        f = IntPoly(tuple(rng.randint(-6, 6) for _ in range(d)) + (1,))
        if not is_irreducible(f):
            continue
        done += 1
        G, _ = galois_group(sympy.Poly(list(reversed(f.coeffs)), X), by_name=False)
        assert splitting_data([f]).group.order == G.order(), str(f)
