"""Run configuration: defaults, JSON file, flag overrides.

Every run can log the exact resolved configuration; record streams embed
it as a comment line so outputs are reproducible byte for byte.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, replace
from typing import Optional

ENV_CONFIG_PATH = "PILOTTERY_CONFIG"


@dataclass(frozen=True)
class Config:
    alphabet_version: str = "v1"
    profile: str = "pa-core"
    cache_path: Optional[str] = None
    cache_digits: int = 1000
    cache_algorithm: str = "machin"
    psi_backend: str = "synthetic"   # synthetic | enumerated | cache
    psi_seed: int = 1
    psi_density: float = 0.01
    psi_code_bound: Optional[int] = None
    psi_cache_path: Optional[str] = None
    budget_max_candidates: int = 10 ** 6
    budget_max_certificate_digits: int = 10 ** 6
    output_format: str = "human"     # human | records

    def canonical_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))


def load_config(path: Optional[str] = None, **overrides) -> Config:
    """defaults <- file (arg or $PILOTTERY_CONFIG) <- non-None overrides."""
    cfg = Config()
    path = path or os.environ.get(ENV_CONFIG_PATH)
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - set(asdict(cfg))
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        cfg = replace(cfg, **data)
    applicable = {k: v for k, v in overrides.items() if v is not None}
    if applicable:
        cfg = replace(cfg, **applicable)
    return cfg
