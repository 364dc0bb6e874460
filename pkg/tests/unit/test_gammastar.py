"""Tests for boolechar.formulas.gammastar."""

from __future__ import annotations

import mpmath
import pytest

from boolechar.arith.characters import DirichletCharacter, enumerate_characters, find_character
from boolechar.formulas.gammastar import (
    GammaStarQuery,
    gamma_star,
    lerch_defect,
    log_mean_defect,
    psi_star,
    psi_star_at_zero,
    stirling_log_gamma_star,
    taylor_defect,
    weierstrass_partial,
)
from boolechar.formulas.lfunc import LFunctionError, RouteDomainError, ell_value
from boolechar.shared.constants import (
    GAMMA_ROUTE_LOG_FORMULA,
    GAMMA_ROUTE_PARTIAL_PRODUCT,
    GAMMA_ROUTE_QUOTIENT,
    ROUTE_HURWITZ,
)

CHI3 = enumerate_characters(3)[1]
CHI5_REAL = enumerate_characters(5)[2]
CHI7 = find_character(7, "quadratic")


def log_gamma_star_mp(a: float, chi: DirichletCharacter) -> float:
    period = 2 * chi.modulus
    total = mpmath.mpf(0)
    for n in range(1, period):
        c = (-1) ** n * float(chi.rational(n))
        if c:
            total += c * (mpmath.loggamma(mpmath.mpf(n + a) / period) - mpmath.loggamma(
                mpmath.mpf(n) / period
            ))
    return float(total)


class TestGammaStarQuery:
    """Tests for GammaStarQuery validation."""

    def test_complex_character_raises(self) -> None:
        with pytest.raises(LFunctionError, match="real character"):
            GammaStarQuery(0.5, enumerate_characters(5)[1])

    def test_unknown_route_raises(self) -> None:
        with pytest.raises(LFunctionError, match="Unknown route"):
            GammaStarQuery(0.5, CHI3, route="stirling")

    def test_negative_a_raises(self) -> None:
        with pytest.raises(RouteDomainError, match=">= 0"):
            GammaStarQuery(-0.5, CHI3)

    def test_zero_terms_raises(self) -> None:
        with pytest.raises(LFunctionError, match="terms"):
            GammaStarQuery(0.5, CHI3, GAMMA_ROUTE_PARTIAL_PRODUCT, terms=0)


class TestGammaStar:
    """Tests for the three routes to log Γ*."""

    def test_zero_is_zero(self) -> None:
        assert gamma_star(GammaStarQuery(0.0, CHI3)) == 0.0

    @pytest.mark.parametrize("chi", [CHI3, CHI5_REAL, CHI7])
    @pytest.mark.parametrize("a", [0.25, 1.0, 2.5])
    def test_quotient_matches_mpmath(self, chi: DirichletCharacter, a: float) -> None:
        expected = log_gamma_star_mp(a, chi)
        got = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_QUOTIENT))
        assert got == pytest.approx(expected, rel=1e-12, abs=1e-13)

    @pytest.mark.parametrize("a", [0.25, 1.5])
    def test_log_formula_route(self, a: float) -> None:
        quotient = gamma_star(GammaStarQuery(a, CHI3, GAMMA_ROUTE_QUOTIENT))
        formula = gamma_star(GammaStarQuery(a, CHI3, GAMMA_ROUTE_LOG_FORMULA))
        assert formula == pytest.approx(quotient, rel=1e-8, abs=1e-10)

    def test_partial_product_route(self) -> None:
        quotient = gamma_star(GammaStarQuery(0.5, CHI3, GAMMA_ROUTE_QUOTIENT))
        product = gamma_star(GammaStarQuery(0.5, CHI3, GAMMA_ROUTE_PARTIAL_PRODUCT, 100_000))
        assert product == pytest.approx(quotient, abs=1e-4)

    @pytest.mark.parametrize("a", [0.5, 2.0])
    def test_weierstrass_product(self, a: float) -> None:
        quotient = gamma_star(GammaStarQuery(a, CHI3))
        assert weierstrass_partial(a, CHI3, 100_000) == pytest.approx(quotient, abs=1e-4)

    @pytest.mark.parametrize("chi", [CHI3, CHI5_REAL])
    def test_lerch_formula(self, chi: DirichletCharacter) -> None:
        assert abs(lerch_defect(0.75, chi)) <= 1e-8


class TestPsiStar:
    """Tests for ψ* and its derivatives."""

    def test_derivative_of_log_gamma_star(self) -> None:
        h = 1e-5
        upper = gamma_star(GammaStarQuery(0.7 + h, CHI3))
        lower = gamma_star(GammaStarQuery(0.7 - h, CHI3))
        assert psi_star(0.7, CHI3) == pytest.approx((upper - lower) / (2 * h), rel=1e-7)

    @pytest.mark.parametrize("a", [0.3, 0.5])
    def test_first_derivative_is_ell_two(self, a: float) -> None:
        expected = ell_value(2, a, CHI3, ROUTE_HURWITZ).real
        assert psi_star(a, CHI3, m=1) == pytest.approx(expected, rel=1e-10)

    def test_complex_character(self) -> None:
        value = psi_star(0.5, enumerate_characters(5)[1])
        assert isinstance(value, complex)

    def test_nonpositive_a_raises(self) -> None:
        with pytest.raises(RouteDomainError, match="a > 0"):
            psi_star(0.0, CHI3)

    def test_limit_at_zero(self) -> None:
        expected = psi_star(1e-8, CHI3)
        assert psi_star_at_zero(CHI3) == pytest.approx(expected, rel=1e-6)

    def test_taylor_expansion(self) -> None:
        assert abs(taylor_defect(1.0, 0.4, CHI3)) <= 1e-8


class TestAsymptotics:
    """Tests for the Stirling and log-mean expansions."""

    def test_stirling_improves_with_order(self) -> None:
        exact = gamma_star(GammaStarQuery(40.0, CHI3))
        low = abs(stirling_log_gamma_star(40.0, CHI3, 2).value - exact)
        high = abs(stirling_log_gamma_star(40.0, CHI3, 6).value - exact)
        assert high < low
        assert high < 1e-6

    def test_stirling_error_decays_with_a(self) -> None:
        near = stirling_log_gamma_star(20.0, CHI3, 6)
        far = stirling_log_gamma_star(40.0, CHI3, 6)
        near_err = abs(near.value - gamma_star(GammaStarQuery(20.0, CHI3)))
        far_err = abs(far.value - gamma_star(GammaStarQuery(40.0, CHI3)))
        assert far_err < near_err
        assert len(near.terms) == 6
        assert near.error_proxy > far.error_proxy > 0

    def test_stirling_bad_input_raises(self) -> None:
        with pytest.raises(RouteDomainError, match="stirling"):
            stirling_log_gamma_star(10.0, CHI3, 0)

    def test_log_mean_decays(self) -> None:
        assert log_mean_defect(60.5, CHI3, 3) < log_mean_defect(30.5, CHI3, 3)
        assert log_mean_defect(60.5, CHI3, 3) < 1e-4

    def test_log_mean_rejects_integer_points(self) -> None:
        with pytest.raises(RouteDomainError, match="non-integer"):
            log_mean_defect(30.0, CHI3, 3)

    def test_log_mean_needs_real_character(self) -> None:
        with pytest.raises(LFunctionError, match="real character"):
            log_mean_defect(30.5, enumerate_characters(5)[1], 3)
