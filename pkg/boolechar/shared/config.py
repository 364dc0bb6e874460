"""Runtime configuration loaded from environment variables.

The CLI reads these values once at start-up; every flag that is not
given on the command line falls back to them.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from boolechar.shared.constants import (
    ENV_FORMAT,
    ENV_JOBS,
    ENV_LOG_LEVEL,
    ENV_PROFILE,
    FORMAT_JSON,
    PROFILE_STANDARD,
    VALID_FORMATS,
    VALID_PROFILES,
)

_LOG_LEVELS = frozenset({"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"})


@dataclass(frozen=True)
class RuntimeConfig:
    """Process-wide defaults sourced from the environment."""

    default_jobs: int = 1
    log_level: str = "INFO"
    output_format: str = FORMAT_JSON
    profile: str = PROFILE_STANDARD

    def __post_init__(self) -> None:
        if self.default_jobs < 1:
            raise ValueError(f"default_jobs must be >= 1, got {self.default_jobs}")
        if self.log_level not in _LOG_LEVELS:
            raise ValueError(
                f"Unknown log level '{self.log_level}'. Must be one of: {sorted(_LOG_LEVELS)}"
            )
        if self.output_format not in VALID_FORMATS:
            raise ValueError(
                f"Unknown format '{self.output_format}'. Must be one of: {sorted(VALID_FORMATS)}"
            )
        if self.profile not in VALID_PROFILES:
            raise ValueError(
                f"Unknown profile '{self.profile}'. Must be one of: {sorted(VALID_PROFILES)}"
            )

    @property
    def logging_level(self) -> int:
        return int(getattr(logging, self.log_level))


def load_runtime_config() -> RuntimeConfig:
    """Build RuntimeConfig from BOOLECHAR_* environment variables."""
    raw_jobs = os.environ.get(ENV_JOBS, "1")
    try:
        jobs = int(raw_jobs)
    except ValueError as exc:
        raise ValueError(f"{ENV_JOBS} must be an integer, got '{raw_jobs}'") from exc

    return RuntimeConfig(
        default_jobs=jobs,
        log_level=os.environ.get(ENV_LOG_LEVEL, "INFO").upper(),
        output_format=os.environ.get(ENV_FORMAT, FORMAT_JSON).lower(),
        profile=os.environ.get(ENV_PROFILE, PROFILE_STANDARD).lower(),
    )
