"""Exhaustive search over m-subsets of a candidate pool."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

from ..config import Config
from ..polyring import IntPoly
from .checks import YES, InstanceReport, evaluate
from .instance import InstanceError, attach_computed, verify_instance


@dataclass
class SearchResult:
    hits: List[InstanceReport]
    evaluated: int
    total: int
    rejected: List[str] = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return self.evaluated < self.total

    def to_json(self) -> dict:
        return {
            "hits": [r.to_json() for r in self.hits],
            "evaluated": self.evaluated,
            "total": self.total,
            "budget_exhausted": self.exhausted,
            "rejected": self.rejected,
        }


def search(
    pool: Sequence[IntPoly],
    m: int,
    predicate: str = "strong",
    budget: Optional[int] = None,
    config: Config = Config(),
    progress: Optional[Callable[[int, int], None]] = None,
) -> SearchResult:
    """All m-subsets of the pool (canonical order) whose instance passes the predicate."""
    if not pool:
        raise ValueError("empty pool")
    if m < 1:
        raise ValueError("m must be positive")
    for g in pool:
        if not g.is_monic() or g.degree < 2:
            raise InstanceError(f"pool entry {g} must be monic of degree >= 2", g)
    pool = sorted(set(pool), key=IntPoly.sort_key)
    subsets = list(itertools.combinations(pool, m))
    hits, rejected = [], []
    evaluated = 0
    for sub in subsets:
        if budget is not None and evaluated >= budget:
            break
        evaluated += 1
        try:
            inst = verify_instance(list(sub))
        except InstanceError as exc:
            rejected.append(str(exc))
            continue
        attach_computed(inst, config)
        rep = evaluate(inst, predicate, config)
        if rep.verdict.value == YES:
            hits.append(rep)
        if progress is not None:
            progress(evaluated, len(subsets))
    return SearchResult(hits, evaluated, len(subsets), rejected)
