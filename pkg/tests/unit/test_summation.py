"""Tests for boolechar.formulas.summation."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from boolechar.arith.characters import conjugate, enumerate_characters, induce
from boolechar.formulas.summation import (
    CharacterHypothesisError,
    DerivativeMismatchError,
    OrderError,
    SmoothFunction,
    SummationError,
    SummationReport,
    alternating_split_defect,
    boole_sum,
    char_boole_sum,
    char_euler_maclaurin,
    make_family,
)
from boolechar.shared.constants import FAMILY_EXP, FAMILY_POWER, FAMILY_RECIPROCAL

CHI3 = enumerate_characters(3)[1]
CHI5_COMPLEX = enumerate_characters(5)[1]
CHI5_REAL = enumerate_characters(5)[2]


def _close(report: SummationReport, tol: float = 1e-9) -> bool:
    return abs(report.defect) <= tol * max(1.0, abs(report.lhs))


class TestSmoothFunction:
    """Tests for SmoothFunction validation and the named families."""

    def test_families_build(self) -> None:
        f = make_family(FAMILY_EXP, 0.1, order=4)
        assert f.max_order == 4
        assert f.derivative(2)(0.0) == pytest.approx(0.01)

    def test_power_family_derivatives_vanish(self) -> None:
        f = make_family(FAMILY_POWER, 2)
        assert float(f.derivative(3)(5.0)) == 0.0
        assert float(f.derivative(1)(3.0)) == 6.0

    def test_unknown_family_raises(self) -> None:
        with pytest.raises(SummationError, match="Unknown family"):
            make_family("gaussian", 1.0)

    def test_wrong_derivative_raises(self) -> None:
        with pytest.raises(DerivativeMismatchError, match="finite difference"):
            SmoothFunction((np.exp, np.sin), name="bad")

    def test_empty_raises(self) -> None:
        with pytest.raises(SummationError, match="at least"):
            SmoothFunction(())

    def test_missing_order_raises(self) -> None:
        f = make_family(FAMILY_EXP, 0.1, order=2)
        with pytest.raises(OrderError, match="only 2 supplied"):
            f.require(3)
        with pytest.raises(OrderError, match="not available"):
            f.derivative(3)

    def test_rescaled_chain_rule(self) -> None:
        g = make_family(FAMILY_EXP, 0.1, order=3).rescaled(2.0)
        assert float(g.derivative(1)(1.0)) == pytest.approx(0.2 * np.exp(0.2))


class TestBooleSum:
    """Tests for the classical Boole formula."""

    def test_polynomial_is_exact_with_zero_remainder(self) -> None:
        report = boole_sum(make_family(FAMILY_POWER, 2), 0, 4, 3)
        assert report.lhs == -12.0
        assert report.rhs_integral == pytest.approx(0.0, abs=1e-12)
        assert report.rhs_boundary == pytest.approx(-12.0, abs=1e-12)

    @pytest.mark.parametrize("l", [1, 2, 4])
    def test_exponential(self, l: int) -> None:  # noqa: E741
        assert _close(boole_sum(make_family(FAMILY_EXP, 0.1), 0, 10, l))

    def test_reciprocal(self) -> None:
        assert _close(boole_sum(make_family(FAMILY_RECIPROCAL, 2.0), 1, 9, 3))

    def test_order_zero_raises(self) -> None:
        with pytest.raises(OrderError, match=">= 1"):
            boole_sum(make_family(FAMILY_EXP, 0.1), 0, 4, 0)

    def test_empty_range_raises(self) -> None:
        with pytest.raises(SummationError, match="alpha must be < beta"):
            boole_sum(make_family(FAMILY_EXP, 0.1), 3, 3, 1)

    @pytest.mark.parametrize("l", [1, 2, 3])
    def test_order_independence(self, l: int) -> None:  # noqa: E741
        f = make_family(FAMILY_RECIPROCAL, 2.0)
        low, high = boole_sum(f, 1, 9, l), boole_sum(f, 1, 9, l + 1)
        assert low.lhs == high.lhs
        assert abs(low.rhs - high.rhs) <= 1e-9 * max(1.0, abs(low.lhs))


class TestCharEulerMaclaurin:
    """Tests for the character Euler-MacLaurin formula."""

    @pytest.mark.parametrize("l", [0, 1, 3])
    def test_real_character(self, l: int) -> None:  # noqa: E741
        report = char_euler_maclaurin(CHI3, make_family(FAMILY_EXP, 0.1), 0, 10, l)
        assert _close(report)
        assert isinstance(report.lhs, float)

    def test_fractional_endpoints(self) -> None:
        f = make_family(FAMILY_RECIPROCAL, 2.0)
        assert _close(char_euler_maclaurin(CHI5_REAL, f, Fraction(1, 2), Fraction(23, 2), 2))

    def test_complex_character(self) -> None:
        report = char_euler_maclaurin(CHI5_COMPLEX, make_family(FAMILY_EXP, 0.1), 0, 12, 2)
        assert isinstance(report.lhs, complex)
        assert _close(report)

    def test_non_primitive_raises(self) -> None:
        with pytest.raises(CharacterHypothesisError, match="primitive"):
            char_euler_maclaurin(induce(CHI3, 6), make_family(FAMILY_EXP, 0.1), 0, 4, 1)


class TestCharBooleSum:
    """Tests for the character Boole formula."""

    def test_constant_function(self) -> None:
        report = char_boole_sum(CHI3, make_family(FAMILY_POWER, 0), 0, 3, 0)
        assert report.lhs == pytest.approx(-4.0)
        assert report.rhs == pytest.approx(-4.0)

    @pytest.mark.parametrize("l", [0, 1, 2, 4])
    def test_exponential(self, l: int) -> None:  # noqa: E741
        assert _close(char_boole_sum(CHI3, make_family(FAMILY_EXP, 0.1), 0, 10, l))

    def test_integer_upper_endpoint_excluded(self) -> None:
        f = make_family(FAMILY_RECIPROCAL, 2.0)
        assert _close(char_boole_sum(CHI5_REAL, f, 1, 11, 2))

    def test_fractional_endpoints(self) -> None:
        f = make_family(FAMILY_EXP, 0.1)
        assert _close(char_boole_sum(CHI3, f, Fraction(1, 2), Fraction(19, 2), 2))

    def test_complex_character(self) -> None:
        assert _close(char_boole_sum(CHI5_COMPLEX, make_family(FAMILY_EXP, 0.1), 0, 10, 2))

    def test_even_modulus_raises(self) -> None:
        chi4 = enumerate_characters(4)[1]
        with pytest.raises(CharacterHypothesisError, match="odd modulus"):
            char_boole_sum(chi4, make_family(FAMILY_EXP, 0.1), 0, 4, 1)

    def test_report_to_dict(self) -> None:
        data = char_boole_sum(CHI3, make_family(FAMILY_EXP, 0.1), 0, 6, 1).to_dict()
        assert {"lhs", "rhsBoundary", "rhsIntegral", "defect", "order", "quadError"} <= set(data)

    @pytest.mark.parametrize("l", [0, 1, 3])
    def test_order_independence(self, l: int) -> None:  # noqa: E741
        f = make_family(FAMILY_EXP, 0.1)
        for chi in (CHI3, CHI5_COMPLEX):
            low, high = char_boole_sum(chi, f, 0, 10, l), char_boole_sum(chi, f, 0, 10, l + 1)
            assert low.lhs == high.lhs
            assert abs(low.rhs - high.rhs) <= 1e-9 * max(1.0, abs(low.lhs))

    @pytest.mark.parametrize("l", [0, 2])
    def test_conjugate_character_conjugates_report(self, l: int) -> None:  # noqa: E741
        f = make_family(FAMILY_EXP, 0.1)
        report = char_boole_sum(CHI5_COMPLEX, f, Fraction(1, 2), 10, l)
        mirrored = char_boole_sum(conjugate(CHI5_COMPLEX), f, Fraction(1, 2), 10, l)
        for ours, theirs in (
            (report.lhs, mirrored.lhs),
            (report.rhs_boundary, mirrored.rhs_boundary),
            (report.rhs_integral, mirrored.rhs_integral),
        ):
            assert abs(complex(ours).conjugate() - complex(theirs)) <= 1e-12 * max(1.0, abs(ours))


class TestAlternatingSplit:
    """Tests for the even/all split of the alternating sum."""

    def test_real_character(self) -> None:
        report = alternating_split_defect(CHI3, make_family(FAMILY_EXP, 0.1), 0, 10)
        assert abs(report.defect) <= 1e-9 * max(1.0, abs(report.alternating))

    def test_complex_character(self) -> None:
        report = alternating_split_defect(CHI5_COMPLEX, make_family(FAMILY_EXP, 0.1), 0, 10)
        assert abs(report.defect) <= 1e-9 * max(1.0, abs(report.alternating))
