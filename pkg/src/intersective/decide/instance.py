"""Validated instances f = g_1 ... g_m together with a Galois group source."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..config import Config
from ..groups import PermGroup, closure
from ..groups.perm import cycle_type as perm_cycle_type
from ..numtheory import ResourceError, iter_primes, prime_divisors
from ..polyring import IntPoly, discriminant, factor_over_rationals, parse_factors, resultant
from ..polyring import cycle_type as poly_cycle_type
from ..splitfield import SplittingData, splitting_data

COMPUTED = "computed"
SUPPLIED = "supplied"
SAMPLED = "sampled-only"

DEDEKIND_SAMPLES = 25


class InstanceError(ValueError):
    """Input violates the instance preconditions; ``factor`` names the offender."""

    def __init__(self, message: str, factor: Optional[IntPoly] = None):
        super().__init__(message)
        self.factor = factor


@dataclass
class SuppliedGroup:
    """A permutation group on root labels, with the labels of each factor's roots."""

    group: PermGroup
    blocks: List[List[int]]


@dataclass
class Consistency:
    orbits_match: bool
    primes: List[int]
    mismatches: List[int]

    @property
    def ok(self) -> bool:
        return self.orbits_match and not self.mismatches

    def to_json(self) -> dict:
        return {
            "orbits_match": self.orbits_match,
            "primes_sampled": len(self.primes),
            "mismatched_primes": self.mismatches,
        }


@dataclass
class Instance:
    factors: Tuple[IntPoly, ...]
    disc: int
    exceptional_primes: List[int]
    group_source: str = SAMPLED
    group: Optional[PermGroup] = None
    blocks: List[List[int]] = field(default_factory=list)
    stabilizers: List[PermGroup] = field(default_factory=list)
    splitting: Optional[SplittingData] = None
    consistency: Optional[Consistency] = None
    group_note: Optional[str] = None

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def f(self) -> IntPoly:
        out = IntPoly.const(1)
        for g in self.factors:
            out = out * g
        return out

    @property
    def has_group(self) -> bool:
        return self.group is not None

    def to_json(self) -> dict:
        return {
            "factors": [str(g) for g in self.factors],
            "expanded": str(self.f),
            "m": self.m,
            "disc": str(self.disc),
            "exceptional_primes": self.exceptional_primes,
        }


def _coerce_factors(spec: Union[str, IntPoly, Sequence[IntPoly]]) -> List[IntPoly]:
    if isinstance(spec, str):
        parts = parse_factors(spec)
    elif isinstance(spec, IntPoly):
        parts = [spec]
    else:
        parts = list(spec)
    if len(parts) == 1:
        # a single polynomial: factor it and use the irreducible factors
        f = parts[0]
        if f.degree < 1:
            raise InstanceError("constant polynomial")
        fac = factor_over_rationals(f)
        if fac.constant != 1:
            raise InstanceError(f"{f} is not monic", f)
        out = []
        for g, mult in fac.factors:
            if g.degree == 1:
                raise InstanceError(f"{f} has a rational root (factor {g})", g)
            if mult > 1:
                raise InstanceError(f"repeated factor {g}", g)
            out.append(g)
        return out
    return parts


def verify_instance(spec: Union[str, IntPoly, Sequence[IntPoly]]) -> Instance:
    """Check the preconditions and return a canonical group-less Instance."""
    factors = _coerce_factors(spec)
    for g in factors:
        if g.degree < 1:
            raise InstanceError(f"constant factor {g}", g)
        if not g.is_monic():
            raise InstanceError(f"factor {g} is not monic", g)
    for g in factors:
        fac = factor_over_rationals(g)
        if any(h.degree == 1 for h, _ in fac.factors):
            raise InstanceError(f"factor {g} has a rational root", g)
        if not fac.is_irreducible:
            raise InstanceError(f"factor {g} is reducible", g)
    factors = sorted(factors, key=IntPoly.sort_key)
    for a, b in itertools.combinations(factors, 2):
        if a == b:
            raise InstanceError(f"repeated factor {a}", a)
        if resultant(a, b) == 0:
            raise InstanceError(f"factors {a} and {b} share a root", b)
    f = IntPoly.const(1)
    for g in factors:
        f = f * g
    d = discriminant(f)
    return Instance(tuple(factors), d, prime_divisors(d))


def _blocks_for(factors: Sequence[IntPoly]) -> List[List[int]]:
    out, start = [], 0
    for g in factors:
        out.append(list(range(start, start + g.degree)))
        start += g.degree
    return out


def attach_computed(inst: Instance, config: Config = Config()) -> Instance:
    """Compute the splitting field; on a cap hit fall back to sampled-only."""
    try:
        sd = splitting_data(list(inst.factors), cap=config.splitting_degree_cap, seed=config.prng_seed)
    except ResourceError as exc:
        inst.group_source = SAMPLED
        inst.group_note = str(exc)
        return inst
    inst.splitting = sd
    inst.group = sd.group
    inst.blocks = sd.blocks
    inst.stabilizers = sd.stabilizers
    inst.group_source = COMPUTED
    inst.consistency = dedekind_consistency(inst)
    return inst


def attach_supplied(inst: Instance, supplied: SuppliedGroup) -> Instance:
    """Use a supplied group; stabilizers are re-derived and consistency is sampled."""
    G, blocks = supplied.group, [list(b) for b in supplied.blocks]
    if len(blocks) != inst.m:
        raise InstanceError(f"{len(blocks)} blocks supplied for {inst.m} factors")
    labels = sorted(i for b in blocks for i in b)
    if labels != list(range(G.degree)):
        raise InstanceError("blocks must partition the group's points")
    inst.group = G
    inst.blocks = blocks
    inst.stabilizers = [G.stabilizer(b[0]) for b in blocks]
    inst.group_source = SUPPLIED
    inst.consistency = dedekind_consistency(inst)
    return inst


def dedekind_consistency(inst: Instance, samples: int = DEDEKIND_SAMPLES) -> Consistency:
    """Orbits equal the blocks (sizes = factor degrees) and sampled cycle types occur in G.

    For p not dividing disc(f), the factor degrees of each g_i mod p must be
    the cycle type, on the block of g_i, of a single element of G.
    """
    G = inst.group
    orbit_sets = sorted(tuple(o) for o in G.orbits())
    orbits_match = orbit_sets == sorted(tuple(sorted(b)) for b in inst.blocks) and all(
        len(b) == g.degree for b, g in zip(inst.blocks, inst.factors)
    )
    if not orbits_match:
        return Consistency(False, [], [])
    realized = set()
    for s in G.elements:
        realized.add(tuple(_restricted_type(s, b) for b in inst.blocks))
    primes, bad = [], []
    for p in iter_primes():
        if len(primes) >= samples:
            break
        if inst.disc % p == 0:
            continue
        primes.append(p)
        observed = tuple(tuple(sorted(poly_cycle_type(g, p))) for g in inst.factors)
        if observed not in realized:
            bad.append(p)
    return Consistency(orbits_match, primes, bad)


def _restricted_type(s, block: Sequence[int]) -> Tuple[int, ...]:
    pos = {v: i for i, v in enumerate(block)}
    sub = tuple(pos[s[v]] for v in block)
    return perm_cycle_type(sub)


def supplied_from_generators(degree: int, generators, blocks, cap: int) -> SuppliedGroup:
    return SuppliedGroup(closure(generators, cap=cap, degree=degree), [list(b) for b in blocks])
