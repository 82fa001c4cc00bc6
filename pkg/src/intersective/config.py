"""Run-time caps and the PRNG seed, from defaults, environment, then flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Mapping, Optional

ENV_PREFIX = "INTERSECTIVE_"


@dataclass(frozen=True)
class Config:
    group_order_cap: int = 10080
    splitting_degree_cap: int = 24
    subgroup_enum_cap: int = 1000
    padic_node_cap: int = 10**6
    prime_sample_count: int = 200
    oracle_scan_bound: int = 10**5
    prng_seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, int):
                raise TypeError(f"{f.name} must be an integer")
            if f.name != "prng_seed" and v <= 0:
                raise ValueError(f"{f.name} must be positive, got {v}")

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None, **overrides) -> "Config":
        """Defaults, overridden by INTERSECTIVE_<FIELD> variables, overridden by non-None keyword values."""
        env = os.environ if env is None else env
        values = {}
        for f in fields(cls):
            raw = env.get(ENV_PREFIX + f.name.upper())
            if raw is not None and raw.strip():
                try:
                    values[f.name] = int(raw)
                except ValueError:
                    raise ValueError(f"{ENV_PREFIX}{f.name.upper()}={raw!r} is not an integer") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}
