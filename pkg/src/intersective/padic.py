"""Roots of monic integer polynomials in Z_p by bounded Hensel lifting.

A root mod p^N with N = 2 v_p(disc g) + 1 of a squarefree g forces
v_p(g'(a)) <= v_p(disc g), so the strong Hensel inequality holds and the
root refines to Z_p.  For monic g, a root in Q_p is automatically in Z_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Set

from .numtheory import ResourceError, valuation
from .polyring import IntPoly, discriminant
from .polyring import modp

DEFAULT_NODE_CAP = 10**6
DEFAULT_MODULUS_CAP = 10**4000


@dataclass(frozen=True)
class HenselCertificate:
    residue: int
    modulus_exponent: int
    val_g: Optional[int]  # None when g(residue) == 0 exactly
    val_gprime: int

    def verify(self, g: IntPoly, p: int) -> bool:
        """Recompute the valuations and the Hensel inequality from scratch."""
        vg = valuation(g(self.residue), p)
        vd = valuation(g.derivative()(self.residue), p)
        expected = None if vg == math.inf else vg
        if expected != self.val_g or vd != self.val_gprime or vd == math.inf:
            return False
        return vg > 2 * vd


@dataclass(frozen=True)
class PadicReport:
    prime: int
    depth_used: int
    has_root: bool
    certificate: Optional[HenselCertificate] = None
    exhausted_at: Optional[int] = None

    def to_json(self) -> dict:
        if self.certificate is not None:
            c = self.certificate
            cert = {
                "residue": c.residue,
                "modulus_exponent": c.modulus_exponent,
                "val_g": c.val_g,
                "val_gprime": c.val_gprime,
            }
        else:
            cert = {"exhausted_at": self.exhausted_at}
        return {
            "prime": self.prime,
            "depth_used": self.depth_used,
            "has_root": self.has_root,
            "certificate": cert,
        }


def _check_input(g: IntPoly) -> int:
    if not g.is_monic():
        raise ValueError(f"{g} is not monic")
    if g.degree < 1:
        raise ValueError("constant polynomial has no roots to lift")
    d = discriminant(g)
    if d == 0:
        raise ValueError(f"{g} is not squarefree")
    return d


def _lift_level(g: IntPoly, roots: List[int], p: int, j: int) -> List[int]:
    """Roots mod p^(j+1) lying over the given roots mod p^j."""
    pj = p**j
    pj1 = pj * p
    out = []
    coeffs = g.coeffs
    for a in roots:
        for t in range(p):
            c = a + t * pj
            acc = 0
            for co in reversed(coeffs):
                acc = (acc * c + co) % pj1
            if acc == 0:
                out.append(c)
    return sorted(out)


def zp_roots_to_depth(
    g: IntPoly,
    p: int,
    k: int,
    node_cap: int = DEFAULT_NODE_CAP,
    modulus_cap: int = DEFAULT_MODULUS_CAP,
) -> Set[int]:
    """All residues a mod p^k with g(a) = 0 mod p^k, by level-by-level lifting."""
    _check_input(g)
    if k < 1:
        raise ValueError("depth must be positive")
    if p**k > modulus_cap:
        raise ResourceError(f"p^k = {p}^{k} exceeds modulus cap")
    level = sorted(modp.roots(g.coeffs, p))
    nodes = len(level)
    for j in range(1, k):
        if not level:
            break
        nodes += len(level) * p
        if nodes > node_cap:
            raise ResourceError(f"lifting tree exceeded node cap at depth {j} of {k}")
        level = _lift_level(g, level, p, j)
    return set(level)


def _certify(g: IntPoly, gp: IntPoly, a: int, p: int, j: int) -> Optional[HenselCertificate]:
    vg = valuation(g(a), p)
    vd = valuation(gp(a), p)
    if vd == math.inf:
        return None
    if vg > 2 * vd:
        return HenselCertificate(a, j, None if vg == math.inf else vg, vd)
    return None


def has_qp_root(
    g: IntPoly,
    p: int,
    node_cap: int = DEFAULT_NODE_CAP,
    modulus_cap: int = DEFAULT_MODULUS_CAP,
) -> PadicReport:
    """Decide whether monic squarefree g has a root in Z_p (equivalently Q_p)."""
    disc = _check_input(g)
    D = valuation(disc, p)
    N = 2 * D + 1
    if p**N > modulus_cap:
        raise ResourceError(f"decision depth p^{N} exceeds modulus cap")
    gp = g.derivative()
    level = sorted(modp.roots(g.coeffs, p))
    nodes = len(level)
    j = 1
    while True:
        if not level:
            return PadicReport(p, j, False, exhausted_at=j)
        for a in level:
            cert = _certify(g, gp, a, p, j)
            if cert is not None:
                return PadicReport(p, j, True, certificate=cert)
        if j >= N:
            # any root mod p^N of a squarefree g lifts; record its valuations
            a = level[0]
            vg = valuation(g(a), p)
            return PadicReport(
                p,
                j,
                True,
                certificate=HenselCertificate(a, j, None if vg == math.inf else vg, valuation(gp(a), p)),
            )
        nodes += len(level) * p
        if nodes > node_cap:
            raise ResourceError(f"lifting tree exceeded node cap at depth {j} of {N}")
        level = _lift_level(g, level, p, j)
        j += 1


def root_counts_by_level(g: IntPoly, p: int, k: int) -> Dict[int, int]:
    """Number of roots mod p^j for j = 1..k (diagnostic)."""
    out = {}
    level = sorted(modp.roots(g.coeffs, p))
    for j in range(1, k + 1):
        out[j] = len(level)
        if j < k:
            level = _lift_level(g, level, p, j)
    return out
