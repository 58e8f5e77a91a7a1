"""
Run-time settings.

Defaults come from constants; the environment overrides them and explicit
command line values override the environment.
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any

from .constants import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_MAX_ORDER,
    DEFAULT_SUBGROUP_CAP,
    ENV_CACHE_DIR,
    ENV_CLOSURE_CAP,
    ENV_JOBS,
    ENV_MAX_ORDER,
    ENV_SUBGROUP_CAP,
)
from .exceptions import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Knobs shared by analyze and scan runs."""

    max_order: int = DEFAULT_MAX_ORDER        # direct bar-resolution cap
    closure_cap: int = DEFAULT_CLOSURE_CAP    # permutation closure cap
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP  # all_subgroups cap
    jobs: int = 1
    cache_dir: str | None = None
    timings: bool = False

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "Settings":
        """
        Build settings from HNP_* environment variables.

        Raises:
            InvalidInputError: If a numeric variable is not a positive integer
        """
        env = os.environ if environ is None else environ
        values: dict[str, Any] = {}
        for name, key in (
            (ENV_MAX_ORDER, "max_order"),
            (ENV_CLOSURE_CAP, "closure_cap"),
            (ENV_SUBGROUP_CAP, "subgroup_cap"),
            (ENV_JOBS, "jobs"),
        ):
            raw = env.get(name)
            if raw is None or raw == "":
                continue
            values[key] = _positive_int(name, raw)
        if env.get(ENV_CACHE_DIR):
            values["cache_dir"] = env[ENV_CACHE_DIR]
        if values:
            logger.debug(f"Settings from environment: {values}")
        return cls(**values)

    def override(self, **kwargs: Any) -> "Settings":
        """Return a copy with every non-None keyword applied."""
        known = {f.name for f in fields(self)}
        unknown = set(kwargs) - known
        if unknown:
            raise TypeError(f"Unknown settings: {sorted(unknown)}")
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _positive_int(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise InvalidInputError(f"{name} must be positive, got {value}")
    return value
