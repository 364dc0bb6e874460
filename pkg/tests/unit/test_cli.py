"""Tests for the boolechar command-line front end."""

from __future__ import annotations

import argparse
import json
import math
import os
from pathlib import Path
from unittest.mock import patch

import pytest

from boolechar.cli import main, parse_complex, parse_int_list, render_value
from boolechar.shared.constants import EXIT_CONFIG_ERROR, EXIT_PASS


def _run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, str, str]:
    with patch.dict(os.environ, {}, clear=True):
        code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsers:
    def test_int_list(self) -> None:
        assert parse_int_list("1..4") == (1, 2, 3, 4)
        assert parse_int_list("3,5") == (3, 5)
        assert parse_int_list("1..2,7") == (1, 2, 7)

    def test_int_list_invalid(self) -> None:
        with pytest.raises(argparse.ArgumentTypeError):
            parse_int_list("a..b")

    def test_complex(self) -> None:
        assert parse_complex("0.5+2i") == complex(0.5, 2)

    def test_render_value(self) -> None:
        assert render_value({"a": 1, "b": (2, 3)}) == "a: 1\nb: 2\t3"


class TestEval:
    """Tests for the eval subcommand."""

    def test_boundary_values(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, err = _run(["eval", "boundary", "--modulus", "3", "--m", "0"], capsys)
        assert code == EXIT_PASS
        assert out.strip() == "-2"
        assert "route=exact" in err
        _, out, _ = _run(["eval", "boundary", "--modulus", "3", "--m", "1"], capsys)
        assert out.strip() == "0"

    def test_ell_at_one(self, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ["eval", "ell", "--modulus", "3", "--s", "1", "--method", "hurwitz"]
        code, out, err = _run(argv, capsys)
        assert code == EXIT_PASS
        assert float(out) == pytest.approx(-2 * math.sqrt(3) * math.pi / 9, rel=1e-10)
        assert "route=hurwitz" in err

    def test_missing_parameter(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(["eval", "ell", "--modulus", "3"], capsys)
        assert code == EXIT_CONFIG_ERROR
        assert "--s" in err

    def test_domain_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(["eval", "ell-zero", "--modulus", "3", "--char", "9"], capsys)
        assert code == EXIT_CONFIG_ERROR
        assert "error:" in err


class TestVerify:
    """Tests for the verify subcommand."""

    def test_unknown_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(["verify", "nope"], capsys)
        assert code == EXIT_CONFIG_ERROR
        assert "invalid configuration" in err

    def test_recip2_quick_to_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        out = tmp_path / "recip2.json"
        argv = ["verify", "recip2", "--profile", "quick", "--pmax", "1", "--out", str(out)]
        code, stdout, err = _run(argv, capsys)
        assert code == EXIT_PASS
        assert stdout == ""
        assert "failures=0" in err
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["suite"] == "recip2"
        assert data["failures"] == 0

    def test_empty_grid_is_config_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(["verify", "recip2", "--moduli", "4"], capsys)
        assert code == EXIT_CONFIG_ERROR
        assert "no cases" in err


class TestListings:
    """Tests for list-suites and list-chars."""

    def test_list_suites(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(["list-suites"], capsys)
        assert code == EXIT_PASS
        names = [line.split("\t")[0] for line in out.strip().splitlines()]
        assert "recip2" in names
        assert len(names) == 12

    def test_list_chars(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(["list-chars", "--modulus", "5"], capsys)
        assert code == EXIT_PASS
        assert len(json.loads(out)) == 4

    def test_list_primitive_chars(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(["list-chars", "--modulus", "5", "--primitive"], capsys)
        assert len(json.loads(out)) == 3
