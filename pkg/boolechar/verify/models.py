"""Validation models for verification runs."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator

from boolechar.shared.constants import (
    FORMAT_JSON,
    PROFILE_STANDARD,
    VALID_FORMATS,
    VALID_PROFILES,
    VALID_SUITES,
)
from boolechar.shared.profiles import GridProfile, get_grid_profile


class SuiteConfig(BaseModel):
    """One verification run: the suite, grid overrides and output target.

    Unset overrides fall back to the selected grid profile.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    suite: str = Field(..., min_length=1)
    profile: str = PROFILE_STANDARD
    moduli: tuple[int, ...] | None = None
    p_values: tuple[int, ...] | None = None
    pmax: int | None = Field(None, ge=0)
    bc_max: int | None = Field(None, ge=1)
    orders: tuple[int, ...] | None = None
    tol: float | None = Field(None, gt=0)
    jobs: int = Field(1, ge=1)
    output_format: str = FORMAT_JSON
    out: str | None = None

    @field_validator("suite")
    @classmethod
    def _known_suite(cls, value: str) -> str:
        if value not in VALID_SUITES:
            raise ValueError(f"Unknown suite '{value}'. Must be one of: {sorted(VALID_SUITES)}")
        return value

    @field_validator("profile")
    @classmethod
    def _known_profile(cls, value: str) -> str:
        if value not in VALID_PROFILES:
            raise ValueError(
                f"Unknown profile '{value}'. Must be one of: {sorted(VALID_PROFILES)}"
            )
        return value

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in VALID_FORMATS:
            raise ValueError(f"Unknown format '{value}'. Must be one of: {sorted(VALID_FORMATS)}")
        return value

    @field_validator("moduli")
    @classmethod
    def _valid_moduli(cls, value: tuple[int, ...] | None) -> tuple[int, ...] | None:
        if value is None:
            return value
        if not value:
            raise ValueError("moduli must be non-empty")
        if any(k < 2 for k in value):
            raise ValueError(f"moduli must be >= 2, got {list(value)}")
        return tuple(sorted(set(value)))

    @field_validator("p_values", "orders")
    @classmethod
    def _valid_orders(cls, value: tuple[int, ...] | None) -> tuple[int, ...] | None:
        if value is None:
            return value
        if not value:
            raise ValueError("ranges must be non-empty")
        if any(v < 0 for v in value):
            raise ValueError(f"values must be >= 0, got {list(value)}")
        return tuple(sorted(set(value)))

    @property
    def grid(self) -> GridProfile:
        return get_grid_profile(self.profile)

    def pick(self, override: tuple[int, ...] | None, default: tuple[int, ...]) -> tuple[int, ...]:
        """The override when given, else the profile default."""
        return default if override is None else override

    def p_grid(self, default: tuple[int, ...]) -> tuple[int, ...]:
        """p values from the override or profile, capped by ``pmax``."""
        values = self.pick(self.p_values, default)
        if self.pmax is not None:
            values = tuple(p for p in values if p <= self.pmax)
        return values

    def summary(self) -> dict[str, object]:
        """Config fields that shape the report, for its header."""
        return self.model_dump(mode="json", exclude={"out", "jobs", "output_format"})
