"""Resource caps, overridable through ``FPF_*`` environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_ENUMERATION_CAP = 7
DEFAULT_CHAIN_CAP = 10**7
# number of distinct ridges held in memory at once
DEFAULT_RIDGE_MEM_CAP = 2 * 10**7


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Caps:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    chain_cap: int = DEFAULT_CHAIN_CAP
    ridge_mem_cap: int = DEFAULT_RIDGE_MEM_CAP

    def __post_init__(self):
        for name in ("enumeration_cap", "chain_cap", "ridge_mem_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            enumeration_cap=_env_int("FPF_ENUMERATION_CAP", DEFAULT_ENUMERATION_CAP),
            chain_cap=_env_int("FPF_CHAIN_CAP", DEFAULT_CHAIN_CAP),
            ridge_mem_cap=_env_int("FPF_RIDGE_MEM_CAP", DEFAULT_RIDGE_MEM_CAP),
        )
