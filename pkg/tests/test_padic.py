import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intersective.numtheory import ResourceError
from intersective.padic import has_qp_root, root_counts_by_level, zp_roots_to_depth
from intersective.polyring import IntPoly, discriminant, parse_poly, roots_mod_p, ModPoly


def scan_roots(f, q):
    """Every a mod q with f(a) = 0 mod q, by vectorised evaluation."""
    a = np.arange(q, dtype=object)
    acc = np.zeros(q, dtype=object)
    for c in reversed(f.coeffs):
        acc = (acc * a + c) % q
    return {int(v) for v in np.nonzero(acc == 0)[0]}


def vp(n, p):
    if n == 0:
        return None
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def random_squarefree(rng):
    while True:
        d = rng.randint(1, 5)
        f = IntPoly(tuple(rng.randint(-20, 20) for _ in range(d)) + (1,))
        if discriminant(f) != 0:
            return f


def check_report(f, p, rep):
    """Independent validation of a PadicReport."""
    assert rep.prime == p
    if rep.has_root:
        c = rep.certificate
        a = c.residue
        vg, vd = vp(f(a), p), vp(f.derivative()(a), p)
        assert vd is not None
        assert vg == c.val_g
        assert vd == c.val_gprime
        N = 2 * vp(discriminant(f), p) + 1
        assert vg is None or vg > 2 * vd or c.modulus_exponent == N
    else:
        k = rep.exhausted_at
        assert k is not None and 1 <= k <= 2 * vp(discriminant(f), p) + 1
        assert scan_roots(f, p**k) == set()


# --- spec examples ----------------------------------------------------------


def test_roots_to_depth_examples():
    assert zp_roots_to_depth(parse_poly("x^2-17"), 2, 5) == {7, 9, 23, 25}
    assert zp_roots_to_depth(parse_poly("x-3"), 5, 3) == {3}
    assert zp_roots_to_depth(parse_poly("x^3-2"), 2, 2) == set()


def test_has_qp_root_examples():
    rep = has_qp_root(parse_poly("x^2-17"), 2)
    assert rep.has_root
    c = rep.certificate
    assert (c.residue**2 - 17) % 2**c.modulus_exponent == 0
    assert c.verify(parse_poly("x^2-17"), 2)

    rep = has_qp_root(parse_poly("x^3-2"), 2)
    assert not rep.has_root and rep.exhausted_at == 2

    rep = has_qp_root(parse_poly("x^2+x+1"), 2)
    assert not rep.has_root and rep.exhausted_at == 1

    rep = has_qp_root(parse_poly("x^2+1"), 5)
    assert rep.has_root and rep.certificate.residue in (2, 3)


def test_x2_minus_17_certificate_values():
    # a = 7: 49 - 17 = 32 = 2^5, g'(7) = 14 = 2 * 7
    c = has_qp_root(parse_poly("x^2-17"), 2).certificate
    g = parse_poly("x^2-17")
    assert vp(g(c.residue), 2) > 2 * vp(g.derivative()(c.residue), 2)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        has_qp_root(parse_poly("2*x^2-1"), 3)
    with pytest.raises(ValueError):
        has_qp_root(parse_poly("(x-1)^2"), 3)
    with pytest.raises(ValueError):
        zp_roots_to_depth(parse_poly("x^2+1"), 5, 0)


def test_caps_raise_resource_errors():
    # many roots mod 2^j keep the tree wide
    g = parse_poly("x^2 - 2^20*17")
    with pytest.raises(ResourceError):
        has_qp_root(g, 2, node_cap=10)
    with pytest.raises(ResourceError):
        zp_roots_to_depth(parse_poly("x^2+7"), 2, 50, modulus_cap=10**6)


# --- oracle comparison ------------------------------------------------------


def test_padic_oracle_1000_random():
    """has_qp_root and zp_roots_to_depth against exhaustive scans at p = 2, 3, 5."""
    rng = random.Random(2024)
    for i in range(1000):
        f = random_squarefree(rng)
        p = (2, 3, 5)[i % 3]
        check_report(f, p, has_qp_root(f, p))
        k = {2: 7, 3: 5, 5: 3}[p]
        assert zp_roots_to_depth(f, p, k) == scan_roots(f, p**k)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(-30, 30), min_size=1, max_size=5),
    st.sampled_from([2, 3, 5, 7]),
    st.integers(1, 4),
)
def test_roots_to_depth_matches_scan(cs, p, k):
    f = IntPoly(tuple(cs) + (1,))
    if discriminant(f) == 0:
        return
    assert zp_roots_to_depth(f, p, k) == scan_roots(f, p**k)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5), st.sampled_from([2, 3, 5]))
def test_root_counts_monotone_and_level_one(cs, p):
    f = IntPoly(tuple(cs) + (1,))
    if discriminant(f) == 0:
        return
    counts = root_counts_by_level(f, p, 4)
    assert counts[1] == len(roots_mod_p(ModPoly(p, f.coeffs)))
    # every root mod p^(j+1) reduces to a root mod p^j
    for j in range(1, 4):
        if counts[j] == 0:
            assert counts[j + 1] == 0
    rep = has_qp_root(f, p)
    if counts[1] == 0:
        assert not rep.has_root and rep.exhausted_at == 1
    if rep.has_root:
        assert all(counts[j] > 0 for j in range(1, 5))


def test_unramified_depth_one_decides():
    rng = random.Random(7)
    for _ in range(200):
        f = random_squarefree(rng)
        for p in (7, 11, 13):
            if discriminant(f) % p:
                rep = has_qp_root(f, p)
                assert rep.has_root == bool(scan_roots(f, p))
                assert rep.depth_used == 1
