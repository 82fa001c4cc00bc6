"""Frobenius groups: kernel/complement structure, the complement lemma, a catalog."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..numtheory import is_prime, prime_divisors
from ..polyring import modp
from .group import PermGroup, closure
from .perm import Perm, conjugate, fixed_points, mul, order
from .subgroups import DEFAULT_ENUM_CAP, subgroup_classes


class IntransitiveGroupError(ValueError):
    pass


@dataclass
class FrobeniusStructure:
    kernel: PermGroup
    complement: PermGroup
    checks: Dict[str, bool]

    def to_json(self) -> dict:
        return {
            "kernel_order": self.kernel.order,
            "complement_order": self.complement.order,
            "kernel_generators": self.kernel.generators_text(),
            "complement_generators": self.complement.generators_text(),
            "checks": dict(self.checks),
        }


def is_nilpotent(K: PermGroup) -> bool:
    """K is the direct product of its Sylow subgroups.

    Equivalently every Sylow subgroup is normal, i.e. for each prime p the
    p-elements of K number exactly the p-part of |K|.
    """
    if K.order == 1:
        return True
    for p in prime_divisors(K.order):
        pk = 1
        n = K.order
        while n % p == 0:
            n //= p
            pk *= p
        p_elems = 0
        for g in K.elements:
            o = order(g)
            while o % p == 0:
                o //= p
            if o == 1:
                p_elems += 1
        if p_elems != pk:
            return False
    return True


def is_malnormal(G: PermGroup, H: PermGroup) -> bool:
    """H meets each conjugate gHg^-1 with g outside H trivially (exhaustive over g)."""
    hs = H.element_set
    e = G.identity
    checked = set()
    for g in G.elements:
        if g in hs:
            continue
        # gHg^-1 depends only on the coset gH
        key = min(mul(g, h) for h in H.elements)
        if key in checked:
            continue
        checked.add(key)
        for a in H.elements:
            if a != e and conjugate(g, a) in hs:
                return False
    return True


def frobenius_structure(G: PermGroup) -> Optional[FrobeniusStructure]:
    """Kernel and complement of a transitive Frobenius group, or None."""
    if not G.is_transitive():
        raise IntransitiveGroupError("frobenius_structure needs a transitive group")
    e = G.identity
    some_fixes_one = False
    kernel_elems = [e]
    for g in G.elements:
        if g == e:
            continue
        nfix = len(fixed_points(g))
        if nfix >= 2:
            return None
        if nfix == 1:
            some_fixes_one = True
        else:
            kernel_elems.append(g)
    if not some_fixes_one:
        return None
    ks = set(kernel_elems)
    closed = all(mul(a, b) in ks for a in kernel_elems for b in kernel_elems[:1] + _gens_of(kernel_elems, G.degree))
    if not closed:
        return None
    K = G.subgroup(kernel_elems, check=True)
    H = G.stabilizer(0)
    checks = {
        "kernel_normal": G.is_normal(K),
        "order_product": G.order == K.order * H.order,
        "complement_malnormal": is_malnormal(G, H),
        "kernel_nilpotent": is_nilpotent(K),
        "kernel_abelian": K.is_abelian(),
    }
    return FrobeniusStructure(K, H, checks)


def _gens_of(elems: List[Perm], degree: int) -> List[Perm]:
    from .group import small_generating_set

    try:
        return small_generating_set(elems, degree)
    except Exception:
        return list(elems)


@dataclass
class Lemma24Report:
    passed: bool
    classes_checked: int
    trivial_meet_classes: List[int]
    violations: List[List[str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "classes_checked": self.classes_checked,
            "trivial_meet_class_orders": self.trivial_meet_classes,
            "violations": self.violations,
        }


def lemma24_check(G: PermGroup, structure: Optional[FrobeniusStructure] = None, cap: int = DEFAULT_ENUM_CAP) -> Lemma24Report:
    """Every subgroup D with D meeting the kernel trivially lies in a conjugate of the complement."""
    if structure is None:
        structure = frobenius_structure(G)
    if structure is None:
        raise ValueError("not a Frobenius group")
    Q = structure.kernel.element_set
    H = structure.complement.element_set
    e = G.identity
    classes = subgroup_classes(G, cap=cap)
    orders = []
    violations = []
    for c in classes:
        D = c.rep
        if any(d != e and d in Q for d in D.elements):
            continue
        orders.append(D.order)
        # some conjugate of D inside H  <=>  D inside some conjugate of H
        if not any(member <= H for member in c.members):
            violations.append(D.generators_text())
    return Lemma24Report(not violations, len(classes), orders, violations)


# --- catalog ---------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    group: PermGroup
    kernel_order: int
    complement_order: int


class FiniteField:
    """F_q with q = p^k; elements encoded as integers via base-p digits."""

    def __init__(self, p: int, k: int):
        self.p, self.k, self.q = p, k, p**k
        self.modulus = self._irreducible() if k > 1 else [0, 1]
        self._mul = {}

    def _irreducible(self) -> List[int]:
        p, k = self.p, self.k
        for code in range(p**k):
            c = [(code // p**i) % p for i in range(k)] + [1]
            if c[0] == 0:
                continue
            fac = modp.factor_list(c, p)
            if len(fac) == 1 and fac[0][1] == 1:
                return c
        raise AssertionError("no irreducible polynomial found")

    def digits(self, a: int) -> List[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def encode(self, c: List[int]) -> int:
        c = list(c) + [0] * (self.k - len(c))
        return sum(v * self.p**i for i, v in enumerate(c[: self.k]))

    def add(self, a: int, b: int) -> int:
        return self.encode([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        if key not in self._mul:
            if self.k == 1:
                self._mul[key] = (a * b) % self.p
            else:
                prod = modp.mul(self.digits(a), self.digits(b), self.p)
                self._mul[key] = self.encode(modp.rem(prod, self.modulus, self.p))
        return self._mul[key]

    def mult_order(self, a: int) -> int:
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def primitive_element(self) -> int:
        for a in range(2, self.q) if self.q > 2 else [1]:
            if self.mult_order(a) == self.q - 1:
                return a
        return 1


def affine_frobenius(q: int, d: int) -> PermGroup:
    """F_q semidirect C_d acting on the q field elements by x -> a x + b."""
    p = prime_divisors(q)[0]
    k = 0
    n = q
    while n > 1:
        n //= p
        k += 1
    F = FiniteField(p, k)
    if (q - 1) % d:
        raise ValueError("d must divide q - 1")
    c = F.primitive_element()
    a = 1
    for _ in range((q - 1) // d):
        a = F.mul(a, c)
    gens = []
    for i in range(k):
        b = p**i
        gens.append(tuple(F.add(x, b) for x in range(q)))
    gens.append(tuple(F.mul(a, x) for x in range(q)))
    return closure(gens, cap=q * d)


def _f3_matrix_group() -> PermGroup:
    """C_3^2 semidirect Q_8, with Q_8 inside SL(2,3) acting on F_3^2."""

    def enc(v):
        return v[0] % 3 + 3 * (v[1] % 3)

    def dec(a):
        return (a % 3, a // 3)

    def mat(m):
        return tuple(enc((m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)) for x, y in map(dec, range(9)))

    def trans(t):
        return tuple(enc((x + t[0], y + t[1])) for x, y in map(dec, range(9)))

    gens = [trans((1, 0)), trans((0, 1)), mat(((0, -1), (1, 0))), mat(((1, 1), (1, -1)))]
    return closure(gens, cap=72)


def _prime_powers(limit: int) -> List[int]:
    out = []
    for q in range(2, limit + 1):
        ps = prime_divisors(q)
        if len(ps) == 1:
            out.append(q)
    return out


def frobenius_catalog(max_order: int, cap: int = DEFAULT_ENUM_CAP) -> List[CatalogEntry]:
    """Affine Frobenius groups F_q semidirect C_d (d | q-1, d > 1) plus C_3^2 semidirect Q_8.

    Deduplicated by (order, degree, kernel order, complement element orders);
    the last component keeps the cyclic and quaternion complements of order 8
    on 9 points apart.
    """
    if max_order > cap:
        raise ValueError(f"max_order {max_order} exceeds enumeration cap {cap}")
    out: List[CatalogEntry] = []
    seen = set()

    def add(name, G):
        st = frobenius_structure(G)
        assert st is not None, name
        key = (G.order, G.degree, st.kernel.order, tuple(sorted(order(h) for h in st.complement.elements)))
        if key in seen:
            return
        seen.add(key)
        out.append(CatalogEntry(name, G, st.kernel.order, st.complement.order))

    for q in _prime_powers(max_order // 2):
        for d in range(2, q):
            if (q - 1) % d == 0 and q * d <= max_order:
                add(f"F{q}:C{d}", affine_frobenius(q, d))
    if 72 <= max_order:
        add("F9:Q8", _f3_matrix_group())
    out.sort(key=lambda e: (e.group.order, e.group.degree, e.name))
    return out
