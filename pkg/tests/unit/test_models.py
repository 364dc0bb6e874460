"""Tests for boolechar.verify.models."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from boolechar.verify.models import SuiteConfig


class TestSuiteConfig:
    """Tests for SuiteConfig validation and helpers."""

    def test_defaults(self) -> None:
        cfg = SuiteConfig(suite="recip2")
        assert cfg.profile == "standard"
        assert cfg.jobs == 1
        assert cfg.output_format == "json"
        assert cfg.moduli is None

    def test_unknown_suite_raises(self) -> None:
        with pytest.raises(ValidationError, match="Unknown suite"):
            SuiteConfig(suite="recip3")

    def test_unknown_profile_raises(self) -> None:
        with pytest.raises(ValidationError, match="Unknown profile"):
            SuiteConfig(suite="gf", profile="huge")

    def test_unknown_format_raises(self) -> None:
        with pytest.raises(ValidationError, match="Unknown format"):
            SuiteConfig(suite="gf", output_format="xml")

    def test_extra_field_forbidden(self) -> None:
        with pytest.raises(ValidationError):
            SuiteConfig(suite="gf", colour="blue")  # type: ignore[call-arg]

    def test_moduli_sorted_and_deduplicated(self) -> None:
        assert SuiteConfig(suite="gf", moduli=(7, 3, 7)).moduli == (3, 7)

    def test_small_modulus_raises(self) -> None:
        with pytest.raises(ValidationError, match=">= 2"):
            SuiteConfig(suite="gf", moduli=(1, 3))

    def test_negative_order_raises(self) -> None:
        with pytest.raises(ValidationError, match=">= 0"):
            SuiteConfig(suite="boole", orders=(-1, 2))

    def test_nonpositive_tol_raises(self) -> None:
        with pytest.raises(ValidationError):
            SuiteConfig(suite="boole", tol=0.0)

    def test_zero_jobs_raises(self) -> None:
        with pytest.raises(ValidationError):
            SuiteConfig(suite="boole", jobs=0)

    def test_frozen(self) -> None:
        cfg = SuiteConfig(suite="gf")
        with pytest.raises(ValidationError):
            cfg.jobs = 2  # type: ignore[misc]

    def test_pick_and_p_grid(self) -> None:
        cfg = SuiteConfig(suite="recip2", pmax=3)
        assert cfg.pick(None, (3, 5)) == (3, 5)
        assert cfg.pick((7,), (3, 5)) == (7,)
        assert cfg.p_grid((1, 3, 5)) == (1, 3)

    def test_grid_follows_profile(self) -> None:
        assert SuiteConfig(suite="gf", profile="quick").grid.gf_order == 4

    def test_summary_excludes_output_fields(self) -> None:
        summary = SuiteConfig(suite="gf", out="r.json", jobs=3).summary()
        assert summary["suite"] == "gf"
        assert "out" not in summary
        assert "jobs" not in summary
