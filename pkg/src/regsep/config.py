"""Runtime caps, loadable from an optional JSON config file.

The config path can be overridden with the REGSEP_CONFIG environment
variable.  Unknown keys are rejected so typos do not silently fall back
to defaults.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields

from .errors import InputError

ENV_VAR = "REGSEP_CONFIG"


@dataclass(frozen=True)
class Settings:
    sample_maxlen_cap: int = 10
    node_budget: int = 500_000
    bound_constant: int = 4


DEFAULT = Settings()


def load_settings(path: str | None = None) -> Settings:
    """Load settings from `path`, the REGSEP_CONFIG env var, or defaults."""
    if path is None:
        path = os.environ.get(ENV_VAR)
    if path is None:
        return DEFAULT
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise InputError("config must be a JSON object")
    known = {f.name for f in fields(Settings)}
    unknown = set(raw) - known
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    for key, value in raw.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InputError(f"config key {key} must be a non-negative integer")
    return Settings(**raw)
