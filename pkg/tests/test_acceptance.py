"""Acceptance criteria 1-9, each at its stated runtime limit.

Tests carry ``criterion(n)`` markers; the terminal summary prints one
PASS/FAIL line per criterion.  The S7 part of criterion 7 is optional and
runs only with --run-slow.
"""

import itertools
import json
import random
import time

import numpy as np
import pytest
import sympy

from intersective.cli import main
from intersective.config import Config
from intersective.decide import (
    NO,
    YES,
    attach_computed,
    gen_brandl,
    gen_quadratic_triple,
    oracle,
    strong_check,
    verify_instance,
    weak_check,
)
from intersective.groups import (
    covers,
    frobenius_catalog,
    frobenius_structure,
    joint_core_trivial,
    lemma24_check,
    min_cover_m,
    restrict,
    small_group_catalog,
    subgroup_classes,
    symmetric_group,
)
from intersective.groups.perm import conjugate
from intersective.numtheory import first_primes
from intersective.padic import has_qp_root
from intersective.polyring import (
    IntPoly,
    cyclotomic,
    cycle_type,
    discriminant,
    factor_over_rationals,
    is_irreducible,
    parse_poly,
    resultant,
)

BRANDL = {3: "(x^3-2)(x^2+x+1)", 5: "(x^5-2)(x^4+x^3+x^2+x+1)"}
REPORTS = []  # every InstanceReport constructed here, for the implication check


def crit(n):
    return pytest.mark.criterion(n)


def cli_json(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, json.loads(out)


def scan(coeffs, q):
    """Residues a mod q with f(a) = 0 mod q (vectorised exhaustive scan)."""
    a = np.arange(q, dtype=object)
    acc = np.zeros(q, dtype=object)
    for c in reversed(coeffs):
        acc = (acc * a + c) % q
    return np.nonzero(acc == 0)[0].tolist()


def vp(n, p):
    k = 0
    while n and n % p == 0:
        n //= p
        k += 1
    return k


# --- 1. weak YES for the r = 3 and r = 5 family members ----------------------


@crit(1)
@pytest.mark.parametrize("r", [3, 5])
def test_c1_brandl_weak(capsys, r):
    t0 = time.perf_counter()
    code, rep = cli_json(capsys, "check", BRANDL[r], "--predicate", "weak")
    elapsed = time.perf_counter() - t0
    assert code == 0 and rep["verdict"] == "YES"
    assert rep["mode"] == "computed" and rep["group"]["order"] == r * (r - 1)
    assert rep["covering"]["covered"] and rep["joint_core_trivial"]
    # cross-validation by direct scan: no prime up to 10^4 lacks a root
    factors = [parse_poly(t) for t in rep["instance"]["factors"]]
    assert oracle.primes_without_root(factors, 10**4) == []
    assert elapsed < 60


# --- 2. strong NO with witness 2 and exhaustion certificates ---------------


@crit(2)
@pytest.mark.parametrize("r", [3, 5])
def test_c2_brandl_strong(capsys, r):
    t0 = time.perf_counter()
    code, rep = cli_json(capsys, "check", BRANDL[r], "--predicate", "strong")
    elapsed = time.perf_counter() - t0
    assert code == 3 and rep["verdict"] == "NO" and rep["witness_prime"] == 2
    ex = next(e for e in rep["exceptional"] if e["p"] == 2)
    factors = [parse_poly(t) for t in rep["instance"]["factors"]]
    assert len(ex["padic"]) == len(factors) == 2
    for g, pad in zip(factors, ex["padic"]):
        assert pad["has_root"] is False
        k = pad["certificate"]["exhausted_at"]
        # the certificate is machine-checkable: no residue mod 2^k is a root
        assert k <= 2 * vp(discriminant(g), 2) + 1
        assert scan(g.coeffs, 2**k) == []
    assert elapsed < 10


# --- 3. Galois verification of the r = 5 member ------------------------------


@crit(3)
def test_c3_galois_r5(brandl5_splitting):
    sd, elapsed = brandl5_splitting
    assert sd.field.degree == 20 and sd.group.order == 20
    names = [str(g) for g in sd.factors]
    block = sd.blocks[names.index("x^5 - 2")]
    st = frobenius_structure(restrict(sd.group, block))
    assert st is not None
    assert st.kernel.order == 5 and st.complement.order == 4
    assert all(st.checks[k] for k in ("kernel_normal", "order_product", "complement_malnormal"))
    assert elapsed < 600


# --- 4. the quadratic triple ----------------------------------------------


@crit(4)
def test_c4_quadratic_triple(capsys):
    t0 = time.perf_counter()
    code, rep = cli_json(capsys, "check", "(x^2-2)(x^2-17)(x^2-34)", "--predicate", "strong")
    assert code == 0 and rep["verdict"] == "YES"
    factors = [parse_poly(t) for t in rep["instance"]["factors"]]
    assert oracle.first_modulus_without_root(factors, 10**5) is None
    supplied = strong_check(gen_quadratic_triple(2, 17))
    REPORTS.append(supplied)
    assert supplied.strong_verdict.value == YES
    assert time.perf_counter() - t0 < 60


# --- 5. irreducible polynomials always fail ----------------------------------


@crit(5)
def test_c5_irreducible_impossibility():
    t0 = time.perf_counter()
    rng = random.Random(5)
    budget = first_primes(200)
    done = 0
    while done < 50:
        d = rng.randint(2, 5)
        f = IntPoly(tuple(rng.randint(-10, 10) for _ in range(d)) + (1,))
        if not is_irreducible(f):
            continue
        done += 1
        inst = attach_computed(verify_instance([f]))
        rep = weak_check(inst)
        REPORTS.append(rep)
        assert rep.weak_verdict.value == NO, str(f)
        p = rep.witness_prime
        assert p in budget, str(f)
        assert scan(f.coeffs, p) == [], str(f)
    assert time.perf_counter() - t0 < 300


# --- 6. Lemma on subgroups meeting the kernel trivially ------------------


@crit(6)
def test_c6_lemma24_catalog():
    t0 = time.perf_counter()
    cat = frobenius_catalog(200)
    assert len(cat) >= 40
    for e in cat:
        G = e.group
        st = frobenius_structure(G)
        assert st is not None, e.name
        assert all(st.checks[k] for k in ("kernel_normal", "order_product", "complement_malnormal", "kernel_nilpotent"))
        assert G.order == st.kernel.order * st.complement.order
        rep = lemma24_check(G, st)
        assert rep.passed, e.name
    assert time.perf_counter() - t0 < 600


# --- 7. symmetric groups --------------------------------------------------


def _naive_cover(G, subs):
    for g in G.elements:
        if not any(conjugate(x, g) in A.element_set for A in subs for x in G.elements):
            return False
    return True


@crit(7)
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_c7_symmetric_two_covers(n):
    t0 = time.perf_counter()
    G = symmetric_group(n)
    res = min_cover_m(G, 2)
    assert res is not None and res.m == 2 and res.maximal_only
    subs = [c.rep for c in res.classes]
    assert all(c.is_maximal for c in res.classes)
    assert covers(G, subs).covered and joint_core_trivial(G, subs)
    if n <= 5:
        assert _naive_cover(G, subs)
    assert time.perf_counter() - t0 < 1800


@crit(7)
@pytest.mark.slow
def test_c7_s7_not_two_coverable():
    G = symmetric_group(7)
    assert min_cover_m(G, 2, cap=10**4) is None


# --- 8. every noncyclic small group is a union of conjugates ------------------


@crit(8)
def test_c8_noncyclic_groups():
    t0 = time.perf_counter()
    cat = small_group_catalog(24)
    noncyclic = 0
    for name, G in cat.items():
        res = min_cover_m(G, 6)
        if G.is_cyclic():
            assert res is None, name
            continue
        noncyclic += 1
        assert res is not None, name
        subs = [c.rep for c in res.classes]
        assert covers(G, subs).covered and joint_core_trivial(G, subs), name
    assert noncyclic >= 35
    assert time.perf_counter() - t0 < 300


# --- 9. property suites -------------------------------------------------------


@crit(9)
def test_c9_padic_vs_exhaustive():
    rng = random.Random(9)
    n = 0
    while n < 1000:
        d = rng.randint(1, 5)
        g = IntPoly(tuple(rng.randint(-20, 20) for _ in range(d)) + (1,))
        D = discriminant(g)
        if D == 0:
            continue
        p = (2, 3, 5)[n % 3]
        n += 1
        rep = has_qp_root(g, p)
        if rep.has_root:
            c = rep.certificate
            vg = None if g(c.residue) == 0 else vp(g(c.residue), p)
            vd = vp(g.derivative()(c.residue), p)
            assert g.derivative()(c.residue) != 0
            assert (vg, vd) == (c.val_g, c.val_gprime)
            assert vg is None or vg > 2 * vd or c.modulus_exponent == 2 * vp(D, p) + 1
        else:
            assert scan(g.coeffs, p**rep.exhausted_at) == []
        # a root exists at the decision depth iff the report says so
        N = 2 * vp(D, p) + 1
        if p**N <= 5**7:
            assert bool(scan(g.coeffs, p**N)) == rep.has_root


def _sylvester(f, g):
    a, b = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    m, n = f.degree, g.degree
    rows = [[0] * i + a + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (m - 1 - i) for i in range(m)]
    return int(sympy.Matrix(rows).det())


@crit(9)
def test_c9_resultant_identities():
    rng = random.Random(91)

    def rand(lo=1, hi=4, monic=False):
        d = rng.randint(lo, hi)
        lead = 1 if monic else rng.choice([v for v in range(-5, 6) if v])
        return IntPoly(tuple(rng.randint(-6, 6) for _ in range(d)) + (lead,))

    for _ in range(150):
        f, g, h = rand(), rand(), rand()
        assert resultant(f, g) == _sylvester(f, g)
        assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)
        a, b = rand(monic=True), rand(monic=True)
        r = resultant(a, b)
        assert discriminant(a * b) == discriminant(a) * discriminant(b) * r * r


@crit(9)
def test_c9_factorization_roundtrips():
    rng = random.Random(92)
    x = sympy.Symbol("x")
    for _ in range(150):
        f = IntPoly((1,))
        for _ in range(rng.randint(1, 3)):
            d = rng.randint(1, 4)
            f = f * IntPoly(tuple(rng.randint(-5, 5) for _ in range(d)) + (rng.choice([1, 1, 2, -1]),))
        fac = factor_over_rationals(f)
        assert fac.expand() == f
        _, fl = sympy.factor_list(sympy.Poly(list(reversed(f.coeffs)), x))
        theirs = sorted((_positive(g), e) for g, e in fl)
        assert sorted((g.coeffs, e) for g, e in fac.factors) == theirs
        # irreducibility certificates by reduction mod good primes
        for g, _ in fac.factors:
            if g.degree > 1:
                assert is_irreducible(g)


def _positive(g):
    cs = [int(c) for c in reversed(g.all_coeffs())]
    return tuple(-c for c in cs) if cs[-1] < 0 else tuple(cs)


@crit(9)
@pytest.mark.parametrize("r", [3, 5])
def test_c9_dedekind_on_brandl(r, brandl5_splitting):
    factors = [parse_poly(f"x^{r}-2"), cyclotomic(r)]
    if r == 5:
        sd = brandl5_splitting[0]
        inst = verify_instance(factors)
        inst.group, inst.blocks, inst.stabilizers = sd.group, sd.blocks, sd.stabilizers
    else:
        inst = attach_computed(verify_instance(factors))
    supplied = gen_brandl(r)
    for source in (inst, supplied):
        G = source.group
        realized = {
            tuple(tuple(sorted(_block_cycles(s, b))) for b in source.blocks) for s in G.elements
        }
        primes = [p for p in itertools.islice(sympy.primerange(2, 10**4), 60) if source.disc % p][:25]
        assert len(primes) == 25
        x = sympy.Symbol("x")
        for p in primes:
            observed = []
            for g in source.factors:
                _, fl = sympy.factor_list(sympy.Poly(list(reversed(g.coeffs)), x, modulus=p))
                observed.append(tuple(sorted(h.degree() for h, e in fl for _ in range(e))))
                assert tuple(sorted(cycle_type(g, p))) == observed[-1]
            assert tuple(observed) in realized, (r, p)


def _block_cycles(s, block):
    seen, out = set(), []
    for v in block:
        if v not in seen:
            n, w = 0, v
            while w not in seen:
                seen.add(w)
                w = s[w]
                n += 1
            out.append(n)
    return out


@crit(9)
def test_c9_covering_matches_definition():
    for name, G in small_group_catalog(24).items():
        reps = [c.rep for c in subgroup_classes(G) if c.order < G.order]
        for k in (1, 2):
            for subs in itertools.combinations(reps, k):
                assert covers(G, list(subs)).covered == _naive_cover(G, subs), name


@crit(9)
def test_c9_strong_implies_weak():
    specs = [
        "(x^3-2)(x^2+x+1)",
        "(x^2-2)(x^2-17)(x^2-34)",
        "(x^2-2)(x^2-3)(x^2-6)",
        "(x^2+1)(x^2-2)(x^2+2)",
        "x^2+1",
        "x^4+1",
        "(x^2-13)(x^2-17)(x^2-221)",
    ]
    for spec in specs:
        inst = attach_computed(verify_instance(spec))
        REPORTS.extend([weak_check(inst), strong_check(inst)])
    for r in (3, 5, 7):
        inst = gen_brandl(r)
        REPORTS.extend([weak_check(inst), strong_check(inst)])
    for a, b in ((2, 17), (2, 3), (13, 17)):
        inst = gen_quadratic_triple(a, b)
        REPORTS.extend([weak_check(inst), strong_check(inst)])
    assert len(REPORTS) >= 30
    for rep in REPORTS:
        if rep.strong_verdict.value == YES:
            assert rep.weak_verdict.value == YES
