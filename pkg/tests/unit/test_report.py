"""Tests for boolechar.verify.report."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import pytest

from boolechar.arith.characters import GaussianRational
from boolechar.verify.report import (
    CSV_COLUMNS,
    SuiteRun,
    VerificationReport,
    encode,
    format_value,
    magnitude,
    render_csv,
    render_json,
)

STAMP = "2026-01-01T00:00:00+00:00"


def _run() -> SuiteRun:
    cases = [
        VerificationReport.compare({"p": 1}, Fraction(2), Fraction(2), 0.0),
        VerificationReport.compare({"p": 3}, 1.0, 1.0 + 1e-6, 1e-10),
        VerificationReport.failure({"p": 5}, "PoleError: pole"),
    ]
    return SuiteRun("recip2", "1", cases, config={"suite": "recip2"})


class TestFormatting:
    """Tests for value formatting and encoding."""

    def test_format_values(self) -> None:
        assert format_value(Fraction(-3, 4)) == "-3/4"
        assert format_value(5) == "5"
        assert format_value(True) == "true"
        assert format_value(0.1) == "0.1"
        assert format_value(1 - 2j) == "1.0-2.0i"
        assert format_value(complex(0.5, 0.0)) == "0.5+0.0i"

    def test_encode_nested(self) -> None:
        data = encode({"a": Fraction(1, 3), "b": [1j, 2.5], "c": None, "d": float("inf")})
        assert data == {"a": "1/3", "b": ["0.0+1.0i", 2.5], "c": None, "d": "inf"}

    def test_magnitude(self) -> None:
        assert magnitude(None) == 0.0
        assert magnitude(Fraction(-1, 2)) == 0.5
        assert magnitude(3 + 4j) == 5.0


class TestVerificationReport:
    """Tests for VerificationReport verdicts."""

    def test_exact_compare(self) -> None:
        report = VerificationReport.compare({}, Fraction(1, 3), Fraction(1, 3), 0.0)
        assert report.passed
        assert report.status == "passed"
        assert report.defect == 0

    def test_exact_nonzero_defect_fails(self) -> None:
        report = VerificationReport.compare({}, Fraction(1), Fraction(2), 0.0)
        assert not report.passed
        assert report.status == "failed"

    def test_scaled_tolerance(self) -> None:
        assert VerificationReport.compare({}, 100.0, 100.0 + 1e-9, 1e-10, scale=100.0).passed
        assert not VerificationReport.compare({}, 100.0, 100.0 + 1e-9, 1e-10).passed

    def test_unknown_status_raises(self) -> None:
        with pytest.raises(ValueError, match="Unknown case status 'skipped'"):
            VerificationReport({}, Fraction(0), Fraction(0), Fraction(0), True, status="skipped")

    def test_gaussian_defect_is_checked_exactly(self) -> None:
        lhs = GaussianRational(Fraction(1, 2), Fraction(-3, 4))
        report = VerificationReport.compare({}, lhs, lhs.conjugate().conjugate(), 0.0)
        assert report.passed
        tiny = GaussianRational(0, Fraction(1, 10**30))
        near = VerificationReport.compare({}, lhs, lhs + tiny, 0.0)
        assert not near.passed
        assert near.to_dict()["lhs"] == "1/2-3/4i"

    def test_failure(self) -> None:
        report = VerificationReport.failure({"p": 1}, "boom")
        assert report.status == "error"
        assert report.route_meta == {"error": "boom"}
        assert report.defect_size == 0.0

    def test_to_dict(self) -> None:
        data = VerificationReport.compare({"p": 1}, Fraction(2), Fraction(1), 0.0).to_dict()
        assert data["lhs"] == "2"
        assert data["defect"] == "1"
        assert data["pass"] is False


class TestSuiteRun:
    """Tests for SuiteRun summaries and renderings."""

    def test_counts(self) -> None:
        run = _run()
        assert run.failures == 2
        assert not run.passed
        assert abs(run.max_defect - 1e-6) < 1e-12

    def test_empty_run_does_not_pass(self) -> None:
        assert not SuiteRun("gf", "1", []).passed

    def test_json_is_deterministic(self) -> None:
        run = _run()
        text = render_json(run, STAMP)
        assert text == render_json(run, STAMP)
        data = json.loads(text)
        assert data["total"] == 3
        assert data["failures"] == 2
        assert data["generatedAt"] == STAMP
        assert data["cases"][0]["lhs"] == "2"

    def test_csv_rows(self) -> None:
        rows = list(csv.reader(io.StringIO(render_csv(_run()))))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert len(rows) == 4
        assert rows[1][:3] == ["recip2", "1", "0"]
        assert rows[1][7] == "true"
        assert rows[3][4] == ""
        assert json.loads(rows[3][8]) == {"error": "PoleError: pole"}
