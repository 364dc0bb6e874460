"""Tests for boolechar.verify.registry module."""

from __future__ import annotations

import logging
from fractions import Fraction

import pytest

from boolechar.verify.models import SuiteConfig
from boolechar.verify.registry import (
    Case,
    SuiteDefinition,
    SuiteError,
    SuiteNotFoundError,
    SuiteRegistry,
    SuiteValidationError,
)
from boolechar.verify.report import VerificationReport


def _two_cases(config: SuiteConfig) -> list[Case]:
    return [{"n": 1}, {"n": 2}]


def _no_cases(config: SuiteConfig) -> list[Case]:
    return []


def _square_check(case: Case, tol: float | None) -> VerificationReport:
    n = case["n"]
    return VerificationReport.compare(case, Fraction(n * n), Fraction(n) ** 2, 0.0)


def _failing_check(case: Case, tol: float | None) -> VerificationReport:
    raise ZeroDivisionError("check broke")


class TestSuiteDefinition:
    """Tests for SuiteDefinition dataclass."""

    def test_defaults(self) -> None:
        sd = SuiteDefinition(
            name="boole", version="1", description="d", build_cases=_two_cases,
            run_case=_square_check,
        )
        assert sd.required_params == frozenset()


class TestSuiteRegistry:
    """Tests for SuiteRegistry class."""

    def test_register_and_list(self) -> None:
        reg = SuiteRegistry()
        reg.register("recip2", _two_cases, _square_check)
        reg.register("boole", _two_cases, _square_check)
        assert reg.suite_names == ["boole", "recip2"]

    def test_register_empty_name_raises(self) -> None:
        reg = SuiteRegistry()
        with pytest.raises(SuiteValidationError, match="non-empty"):
            reg.register("  ", _two_cases, _square_check)

    def test_get_suite(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _square_check, version="2", description="Boole")
        suite = reg.get_suite("boole")
        assert suite.version == "2"
        assert suite.description == "Boole"

    def test_get_suite_not_found(self) -> None:
        reg = SuiteRegistry()
        with pytest.raises(SuiteNotFoundError, match="not found"):
            reg.get_suite("missing")

    def test_unregister(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _square_check)
        reg.unregister("boole")
        assert "boole" not in reg.suite_names

    def test_unregister_missing_raises(self) -> None:
        reg = SuiteRegistry()
        with pytest.raises(SuiteNotFoundError):
            reg.unregister("missing")

    def test_validate_case_missing(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _square_check, required_params=frozenset({"n", "m"}))
        with pytest.raises(SuiteValidationError, match="missing required"):
            reg.validate_case("boole", {"n": 1})

    def test_build_cases(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _square_check, required_params=frozenset({"n"}))
        assert reg.build_cases("boole", SuiteConfig(suite="boole")) == [{"n": 1}, {"n": 2}]

    def test_build_cases_empty_raises(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _no_cases, _square_check)
        with pytest.raises(SuiteValidationError, match="no cases"):
            reg.build_cases("boole", SuiteConfig(suite="boole"))

    def test_execute_success(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _square_check)
        report = reg.execute("boole", {"n": 3})
        assert report.passed
        assert report.defect == 0

    def test_execute_failure(self, caplog: pytest.LogCaptureFixture) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _failing_check)
        with caplog.at_level(logging.DEBUG, logger="boolechar.verify.registry"):
            with pytest.raises(SuiteError, match="case failed") as info:
                reg.execute("boole", {"n": 1})
        assert isinstance(info.value.__cause__, ZeroDivisionError)
        assert "check broke" in caplog.text
        assert all(record.levelno < logging.ERROR for record in caplog.records)

    def test_execute_validates_params(self) -> None:
        reg = SuiteRegistry()
        reg.register("boole", _two_cases, _square_check, required_params=frozenset({"n"}))
        with pytest.raises(SuiteValidationError):
            reg.execute("boole", {})

    def test_describe(self) -> None:
        reg = SuiteRegistry()
        reg.register("gf", _two_cases, _square_check, description="Coefficients")
        assert reg.describe() == [{"name": "gf", "version": "1", "description": "Coefficients"}]
