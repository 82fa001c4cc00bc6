"""Weak (root mod p for all p) and strong (root in Q_p for all p) decisions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from ..config import Config
from ..groups import CoverReport, covers, joint_core_trivial
from ..numtheory import ResourceError, first_primes
from ..padic import PadicReport, has_qp_root
from ..polyring import discriminant, real_root_count
from ..polyring import modp
from .instance import COMPUTED, SAMPLED, SUPPLIED, Instance

YES, NO, UNDECIDED = "YES", "NO", "UNDECIDED"


@dataclass(frozen=True)
class Verdict:
    value: str
    reason: Optional[str] = None

    def to_json(self):
        return self.value if self.reason is None else {"value": self.value, "reason": self.reason}


@dataclass
class ExceptionalPrime:
    prime: int
    mod_p_roots: List[List[int]]
    padic: List[Optional[PadicReport]]
    padic_errors: List[Optional[str]]

    @property
    def has_root_mod_p(self) -> bool:
        return any(self.mod_p_roots)

    @property
    def qp_status(self) -> str:
        if any(r is not None and r.has_root for r in self.padic):
            return YES
        if any(e is not None for e in self.padic_errors):
            return UNDECIDED
        return NO

    def to_json(self) -> dict:
        pad = []
        for r, e in zip(self.padic, self.padic_errors):
            pad.append(r.to_json() if r is not None else {"prime": self.prime, "error": e})
        return {"p": self.prime, "mod_p_roots": self.mod_p_roots, "padic": pad}


@dataclass
class InstanceReport:
    predicate: str
    instance: Instance
    weak_verdict: Verdict
    strong_verdict: Verdict
    covering: Optional[CoverReport]
    joint_core_trivial: Optional[bool]
    exceptional: List[ExceptionalPrime]
    witness_prime: Optional[int]
    strong_witness_prime: Optional[int]
    real_root_sanity: bool
    seed: int
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        # a root in Q_p reduces to a root mod p
        if self.strong_verdict.value == YES and self.weak_verdict.value != YES:
            raise AssertionError("strong YES without weak YES")
        if self.covering is not None and self.covering.covered and not self.real_root_sanity:
            raise AssertionError("covering holds but no factor has a real root")

    @property
    def verdict(self) -> Verdict:
        return self.weak_verdict if self.predicate == "weak" else self.strong_verdict

    def to_json(self) -> dict:
        inst = self.instance
        v = self.verdict
        out = {
            "predicate": self.predicate,
            "verdict": v.value,
            "weak_verdict": self.weak_verdict.value,
            "strong_verdict": self.strong_verdict.value,
            "mode": inst.group_source,
            "instance": inst.to_json(),
            "group": {
                "order": inst.group.order if inst.group is not None else None,
                "source": inst.group_source,
                "conditional": inst.group_source == SUPPLIED,
            },
            "covering": None,
            "joint_core_trivial": self.joint_core_trivial,
            "exceptional": [e.to_json() for e in self.exceptional],
            "real_root_sanity": self.real_root_sanity,
            "seed": self.seed,
        }
        if v.reason is not None:
            out["reason"] = v.reason
        if self.covering is not None:
            out["covering"] = self.covering.to_json()
        if inst.group is not None:
            out["group"]["degree"] = inst.group.degree
            out["group"]["generators"] = inst.group.generators_text()
            out["group"]["stabilizer_orders"] = [A.order for A in inst.stabilizers]
        if inst.consistency is not None:
            out["group"]["consistency"] = inst.consistency.to_json()
        wp = self.witness_prime if self.predicate == "weak" else self.strong_witness_prime
        if wp is not None:
            out["witness_prime"] = wp
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def sample_no_witness(f, prime_budget: int) -> Optional[int]:
    """Least prime among the first prime_budget primes, not dividing disc(f), with no root of f mod p."""
    d = discriminant(f)
    for p in first_primes(prime_budget):
        if d % p == 0:
            continue
        if not modp.roots(f.coeffs, p):
            return p
    return None


def _exceptional(inst: Instance, config: Config) -> List[ExceptionalPrime]:
    out = []
    for p in inst.exceptional_primes:
        roots = [sorted(modp.roots(g.coeffs, p)) for g in inst.factors]
        reports, errors = [], []
        for g in inst.factors:
            try:
                reports.append(has_qp_root(g, p, node_cap=config.padic_node_cap))
                errors.append(None)
            except ResourceError as exc:
                reports.append(None)
                errors.append(str(exc))
        out.append(ExceptionalPrime(p, roots, reports, errors))
    return out


def evaluate(inst: Instance, predicate: str = "weak", config: Config = Config()) -> InstanceReport:
    """Both verdicts for an instance; ``predicate`` selects the headline one."""
    if predicate not in ("weak", "strong"):
        raise ValueError(f"unknown predicate {predicate!r}")
    notes: List[str] = []
    exc = _exceptional(inst, config)
    sanity = any(g.degree % 2 == 1 or real_root_count(g) > 0 for g in inst.factors)
    sampled = sample_no_witness(inst.f, config.prime_sample_count)

    # primes where the local condition fails outright
    weak_fail = next((e.prime for e in exc if not e.has_root_mod_p), None)
    strong_fail = next((e.prime for e in exc if e.qp_status == NO), None)
    strong_unknown = [e.prime for e in exc if e.qp_status == UNDECIDED]
    # any prime with no root mod p also refutes the strong predicate
    candidates = [p for p in (weak_fail, sampled) if p is not None]
    weak_witness = min(candidates) if candidates else None
    candidates = [p for p in (weak_fail, sampled, strong_fail) if p is not None]
    strong_witness = min(candidates) if candidates else None

    cover = core = None
    trusted = inst.group is not None and (inst.consistency is None or inst.consistency.ok)
    if inst.group is not None and not trusted:
        notes.append("supplied group failed consistency sampling; group verdicts withheld")
    if inst.group is not None:
        cover = covers(inst.group, inst.stabilizers)
        core = joint_core_trivial(inst.group, inst.stabilizers)
        if inst.group_source == SUPPLIED:
            notes.append("verdict conditional on the supplied group")
    if inst.group_note:
        notes.append(inst.group_note)

    if trusted:
        if not cover.covered or weak_fail is not None:
            weak = Verdict(NO)
        else:
            weak = Verdict(YES)
        if not cover.covered or strong_fail is not None or weak_fail is not None:
            strong = Verdict(NO)
        elif strong_unknown:
            strong = Verdict(UNDECIDED, f"p-adic cap reached at p = {strong_unknown[0]}")
        else:
            strong = Verdict(YES)
        if weak.value == YES and sampled is not None:
            raise AssertionError(f"covering holds but p = {sampled} has no root mod p")
    else:
        reason = "no trusted Galois group; only sampled witnesses can decide"
        weak = Verdict(NO) if weak_witness is not None else Verdict(UNDECIDED, reason)
        strong = Verdict(NO) if strong_witness is not None else Verdict(UNDECIDED, reason)
    return InstanceReport(
        predicate,
        inst,
        weak,
        strong,
        cover,
        core,
        exc,
        weak_witness if weak.value == NO else None,
        strong_witness if strong.value == NO else None,
        sanity,
        config.prng_seed,
        notes,
    )


def weak_check(inst: Instance, config: Config = Config()) -> InstanceReport:
    return evaluate(inst, "weak", config)


def strong_check(inst: Instance, config: Config = Config()) -> InstanceReport:
    return evaluate(inst, "strong", config)
