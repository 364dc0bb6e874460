"""Suite registry for the verification runner.

Provides a registry of named verification suites, each of which builds a
deterministic list of parameter cases and checks one case at a time,
with case validation, execution error handling and per-case timing.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable

if TYPE_CHECKING:
    from boolechar.verify.models import SuiteConfig
    from boolechar.verify.report import VerificationReport

logger = logging.getLogger(__name__)

Case = dict[str, Any]
CaseBuilder = Callable[["SuiteConfig"], list[Case]]
CaseRunner = Callable[[Case, "float | None"], "VerificationReport"]


class SuiteError(Exception):
    """Raised when a suite cannot build or run a case."""


class SuiteNotFoundError(SuiteError):
    """Raised when a requested suite is not registered."""


class SuiteValidationError(SuiteError):
    """Raised when a suite or one of its cases fails validation."""


@dataclass(frozen=True)
class SuiteDefinition:
    """Metadata and callables for a registered suite."""

    name: str
    version: str
    description: str
    build_cases: CaseBuilder
    run_case: CaseRunner
    required_params: frozenset[str] = field(default_factory=frozenset)


class SuiteRegistry:
    """Registry of verification suites with validation and execution."""

    def __init__(self) -> None:
        self._suites: dict[str, SuiteDefinition] = {}

    @property
    def suite_names(self) -> list[str]:
        """Return sorted list of registered suite names."""
        return sorted(self._suites.keys())

    def register(
        self,
        name: str,
        build_cases: CaseBuilder,
        run_case: CaseRunner,
        *,
        version: str = "1",
        description: str = "",
        required_params: frozenset[str] | None = None,
    ) -> None:
        """Register a suite with the registry.

        Args:
            name: Unique suite name.
            build_cases: Callable producing the case grid for a config.
            run_case: Callable checking one case at a tolerance.
            version: Manifest version reported with every run.
            description: Human-readable description.
            required_params: Keys every case must carry.
        """
        if not name or not name.strip():
            raise SuiteValidationError("Suite name must be non-empty")

        self._suites[name] = SuiteDefinition(
            name=name,
            version=version,
            description=description,
            build_cases=build_cases,
            run_case=run_case,
            required_params=required_params or frozenset(),
        )
        logger.info("Registered suite: %s (v%s)", name, version)

    def unregister(self, name: str) -> None:
        """Remove a suite from the registry."""
        if name not in self._suites:
            raise SuiteNotFoundError(f"Suite '{name}' not found")
        del self._suites[name]
        logger.info("Unregistered suite: %s", name)

    def get_suite(self, name: str) -> SuiteDefinition:
        """Get a suite definition by name."""
        if name not in self._suites:
            raise SuiteNotFoundError(f"Suite '{name}' not found")
        return self._suites[name]

    def validate_case(self, name: str, params: Case) -> None:
        """Validate a case against the suite's requirements.

        Raises SuiteValidationError if required parameters are missing.
        """
        suite = self.get_suite(name)
        missing = suite.required_params - set(params.keys())
        if missing:
            raise SuiteValidationError(
                f"Suite '{name}' case missing required parameters: {sorted(missing)}"
            )

    def build_cases(self, name: str, config: SuiteConfig) -> list[Case]:
        """Build and validate the case grid of a suite.

        Raises SuiteValidationError if the grid is empty.
        """
        suite = self.get_suite(name)
        cases = suite.build_cases(config)
        if not cases:
            raise SuiteValidationError(f"Suite '{name}' produced no cases for this config")
        for case in cases:
            self.validate_case(name, case)
        return cases

    def execute(self, name: str, params: Case, tol: float | None = None) -> VerificationReport:
        """Run one case.

        Validates the case, invokes the suite and returns the report.
        Raises SuiteError on failure; the caller decides how to report it.
        """
        self.validate_case(name, params)
        suite = self.get_suite(name)

        start = time.monotonic()
        try:
            report = suite.run_case(params, tol)
        except Exception as exc:
            elapsed_ms = (time.monotonic() - start) * 1000
            logger.debug(
                "Suite '%s' case %s raised after %.1fms: %s", name, params, elapsed_ms, exc
            )
            raise SuiteError(f"Suite '{name}' case failed: {exc}") from exc

        elapsed_ms = (time.monotonic() - start) * 1000
        logger.debug("Suite '%s' case %s ran in %.1fms", name, params, elapsed_ms)
        return report

    def describe(self) -> list[dict[str, str]]:
        """Return name, version and description of every suite, sorted by name."""
        return [
            {
                "name": suite.name,
                "version": suite.version,
                "description": suite.description,
            }
            for suite in (self._suites[name] for name in self.suite_names)
        ]
