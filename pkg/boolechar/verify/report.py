"""Verification reports and their JSON/CSV renderings.

Exact values travel as "p/q" strings and complex values as "re±im i"
strings, so a report never rounds an exact defect.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from numbers import Integral, Real
from typing import Any

from boolechar.arith.characters import GaussianRational
from boolechar.shared.constants import (
    CASE_STATUS_ERROR,
    CASE_STATUS_FAILED,
    CASE_STATUS_PASSED,
    REPORT_SCHEMA_VERSION,
    VALID_CASE_STATUSES,
)

Value = Fraction | GaussianRational | complex | float | int

CSV_COLUMNS = ("suite", "version", "case", "params", "lhs", "rhs", "defect", "pass", "route_meta")


def format_value(value: Any) -> str:
    """Exact rationals as "p/q", complex as "re±im i", floats with full precision."""
    if isinstance(value, GaussianRational):
        return str(value)
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction | Integral):
        return str(Fraction(value))
    if isinstance(value, complex):
        sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
        return f"{value.real!r}{sign}{abs(value.imag)!r}i"
    if isinstance(value, Real):
        return repr(float(value))
    return str(value)


def encode(value: Any) -> Any:
    """Make a value JSON-safe without losing exactness."""
    if value is None or isinstance(value, bool | str):
        return value
    if isinstance(value, Fraction | GaussianRational | complex):
        return format_value(value)
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, Real):
        number = float(value)
        return number if math.isfinite(number) else format_value(number)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [encode(v) for v in value]
    return str(value)


def magnitude(value: Any) -> float:
    """|value| as a float; exact zero stays 0.0."""
    if value is None:
        return 0.0
    if isinstance(value, Fraction):
        return abs(float(value))
    return float(abs(complex(value)))


@dataclass
class VerificationReport:
    """One identity check: parameters, both sides, defect and verdict."""

    params: dict[str, Any]
    lhs: Value | None
    rhs: Value | None
    defect: Value | None
    passed: bool
    route_meta: dict[str, Any] = field(default_factory=dict)
    status: str = ""

    def __post_init__(self) -> None:
        if not self.status:
            self.status = CASE_STATUS_PASSED if self.passed else CASE_STATUS_FAILED
        if self.status not in VALID_CASE_STATUSES:
            raise ValueError(
                f"Unknown case status '{self.status}'. "
                f"Must be one of: {sorted(VALID_CASE_STATUSES)}"
            )

    @classmethod
    def compare(
        cls,
        params: dict[str, Any],
        lhs: Value,
        rhs: Value,
        tol: float,
        *,
        scale: float = 1.0,
        route_meta: dict[str, Any] | None = None,
    ) -> VerificationReport:
        """Pass iff |lhs - rhs| <= tol * scale; exact rationals need tol = 0 to be meaningful."""
        defect = lhs - rhs
        if isinstance(defect, Fraction | GaussianRational) and tol == 0:
            passed = defect == 0
        else:
            passed = magnitude(defect) <= tol * scale
        return cls(params, lhs, rhs, defect, passed, dict(route_meta or {}))

    @classmethod
    def failure(cls, params: dict[str, Any], error: str) -> VerificationReport:
        """A case that raised instead of producing both sides."""
        return cls(params, None, None, None, False, {"error": error}, CASE_STATUS_ERROR)

    @property
    def defect_size(self) -> float:
        return magnitude(self.defect)

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": encode(self.params),
            "lhs": encode(self.lhs),
            "rhs": encode(self.rhs),
            "defect": encode(self.defect),
            "pass": self.passed,
            "status": self.status,
            "route_meta": encode(self.route_meta),
        }


@dataclass
class SuiteRun:
    """All case reports of one suite run, in case order."""

    suite: str
    version: str
    cases: list[VerificationReport]
    config: dict[str, Any] = field(default_factory=dict)
    elapsed_s: float = 0.0

    @property
    def failures(self) -> int:
        return sum(1 for case in self.cases if not case.passed)

    @property
    def max_defect(self) -> float:
        sizes = [case.defect_size for case in self.cases if case.status != CASE_STATUS_ERROR]
        return max(sizes, default=0.0)

    @property
    def passed(self) -> bool:
        return bool(self.cases) and self.failures == 0

    def to_dict(self, generated_at: str | None = None) -> dict[str, Any]:
        return {
            "schemaVersion": REPORT_SCHEMA_VERSION,
            "suite": self.suite,
            "version": self.version,
            "config": encode(self.config),
            "cases": [case.to_dict() for case in self.cases],
            "total": len(self.cases),
            "failures": self.failures,
            "max_defect": self.max_defect,
            "generatedAt": generated_at or datetime.now(timezone.utc).isoformat(),
        }


def render_json(run: SuiteRun, generated_at: str | None = None) -> str:
    """Deterministic JSON apart from ``generatedAt``."""
    return json.dumps(run.to_dict(generated_at), indent=2, sort_keys=True) + "\n"


def render_csv(run: SuiteRun) -> str:
    """One row per case; params and route_meta as compact sorted JSON."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for index, case in enumerate(run.cases):
        row = case.to_dict()
        writer.writerow(
            [
                run.suite,
                run.version,
                index,
                json.dumps(row["params"], sort_keys=True, separators=(",", ":")),
                "" if row["lhs"] is None else row["lhs"],
                "" if row["rhs"] is None else row["rhs"],
                "" if row["defect"] is None else row["defect"],
                str(case.passed).lower(),
                json.dumps(row["route_meta"], sort_keys=True, separators=(",", ":")),
            ]
        )
    return buffer.getvalue()
