"""Tests for boolechar.arith.eulerfun."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from boolechar.arith.characters import conjugate, enumerate_characters
from boolechar.arith.eulerfun import (
    SIDE_LEFT,
    SIDE_MID,
    CharPeriodicSpec,
    EulerFunctionError,
    OddModulusError,
    bernoulli_spec,
    boundary_values,
    boundary_values_exact,
    char_euler_poly,
    char_periodic_eval,
    char_periodic_exact,
    char_periodic_kernel,
    euler_at_zero,
    euler_bernoulli_link_defect,
    euler_number,
    euler_spec,
    magnitude_bound,
    periodic_eval,
    periodic_kernel,
    poly_coeffs,
    vanishes_at_zero,
)
from boolechar.shared.constants import KIND_BERNOULLI, KIND_EULER

CHI3 = enumerate_characters(3)[1]
CHI5_COMPLEX = enumerate_characters(5)[1]


class TestPolynomials:
    """Tests for the exact Bernoulli and Euler polynomials."""

    def test_low_degree_coefficients(self) -> None:
        assert poly_coeffs(KIND_BERNOULLI, 2).coeffs == (Fraction(1, 6), Fraction(-1), Fraction(1))
        assert poly_coeffs(KIND_EULER, 1).coeffs == (Fraction(-1, 2), Fraction(1))
        assert poly_coeffs(KIND_EULER, 2).coeffs == (Fraction(0), Fraction(-1), Fraction(1))

    def test_euler_at_zero(self) -> None:
        assert euler_at_zero(0) == 1
        assert euler_at_zero(1) == Fraction(-1, 2)
        assert euler_at_zero(2) == 0
        assert euler_at_zero(3) == Fraction(1, 4)

    def test_euler_numbers(self) -> None:
        assert [euler_number(n) for n in range(0, 7, 2)] == [1, -1, 5, -61]

    @pytest.mark.parametrize("p", range(1, 12))
    def test_euler_bernoulli_link(self, p: int) -> None:
        assert euler_bernoulli_link_defect(p) == 0

    def test_unknown_kind_raises(self) -> None:
        with pytest.raises(EulerFunctionError, match="Unknown kind"):
            poly_coeffs("legendre", 2)


class TestPeriodicEval:
    """Tests for B̄_n and Ē_n."""

    def test_euler_zero_alternates(self) -> None:
        assert [periodic_eval(KIND_EULER, 0, m) for m in range(-2, 3)] == [1, -1, 1, -1, 1]

    def test_euler_sides_at_jump(self) -> None:
        assert periodic_eval(KIND_EULER, 0, 1, SIDE_LEFT) == 1
        assert periodic_eval(KIND_EULER, 0, 1, SIDE_MID) == 0

    def test_euler_one_is_continuous(self) -> None:
        assert periodic_eval(KIND_EULER, 1, 1) == periodic_eval(KIND_EULER, 1, 1, SIDE_LEFT)

    def test_bernoulli_one_vanishes_at_integers(self) -> None:
        assert periodic_eval(KIND_BERNOULLI, 1, 3) == 0
        assert periodic_eval(KIND_BERNOULLI, 1, Fraction(1, 4)) == Fraction(-1, 4)

    def test_bernoulli_two(self) -> None:
        assert periodic_eval(KIND_BERNOULLI, 2, Fraction(5, 2)) == Fraction(-1, 12)

    def test_antiperiodic_euler(self) -> None:
        x = Fraction(2, 7)
        assert periodic_eval(KIND_EULER, 3, x + 1) == -periodic_eval(KIND_EULER, 3, x)

    def test_bernoulli_zero_order_raises(self) -> None:
        with pytest.raises(EulerFunctionError, match="n >= 1"):
            periodic_eval(KIND_BERNOULLI, 0, Fraction(1, 2))

    def test_bad_side_raises(self) -> None:
        with pytest.raises(EulerFunctionError, match="Unknown side"):
            periodic_eval(KIND_EULER, 1, 0, "up")


class TestCharPeriodic:
    """Tests for the character twists Ē_{m,χ} and B̄_{m,χ}."""

    def test_boundary_values_mod_three(self) -> None:
        values = boundary_values(CHI3, 3)
        assert values[0] == -2
        assert values[1] == 0
        assert values[3] == 0

    @pytest.mark.parametrize("m", range(6))
    def test_parity_vanishing(self, m: int) -> None:
        if vanishes_at_zero(m, CHI3):
            assert boundary_values(CHI3, m)[m] == 0

    def test_even_modulus_raises(self) -> None:
        with pytest.raises(OddModulusError, match="odd modulus"):
            euler_spec(1, enumerate_characters(4)[1])

    def test_bernoulli_order_zero_raises(self) -> None:
        with pytest.raises(EulerFunctionError, match="order >= 1"):
            bernoulli_spec(0, CHI3)

    @pytest.mark.parametrize("m", [0, 1, 2, 4])
    def test_euler_antiperiodic_in_modulus(self, m: int) -> None:
        spec = euler_spec(m, CHI3)
        x = Fraction(4, 5)
        assert char_periodic_eval(spec, x + 3) == -char_periodic_eval(spec, x)
        assert char_periodic_eval(spec, x + 6) == char_periodic_eval(spec, x)

    def test_bernoulli_periodic_in_modulus(self) -> None:
        spec = bernoulli_spec(2, CHI3)
        x = Fraction(1, 3)
        assert char_periodic_eval(spec, x + 3) == char_periodic_eval(spec, x)

    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_polynomial_continuation_on_unit_interval(self, m: int) -> None:
        spec = euler_spec(m, conjugate(CHI3))
        for a in (Fraction(0), Fraction(1, 3), Fraction(5, 7)):
            assert char_euler_poly(m, CHI3, a) == char_periodic_eval(spec, a)

    def test_complex_character_values(self) -> None:
        spec = euler_spec(2, CHI5_COMPLEX)
        value = char_periodic_eval(spec, Fraction(1, 2))
        assert isinstance(value, complex)
        conj_value = char_periodic_eval(euler_spec(2, conjugate(CHI5_COMPLEX)), Fraction(1, 2))
        assert conj_value == pytest.approx(value.conjugate(), abs=1e-12)

    @pytest.mark.parametrize("spec", [euler_spec(3, CHI5_COMPLEX), bernoulli_spec(2, CHI5_COMPLEX)])
    def test_exact_gaussian_path_matches_floats(self, spec: CharPeriodicSpec) -> None:
        for x in (Fraction(0), Fraction(2, 3), Fraction(-7, 2)):
            exact = char_periodic_exact(spec, x)
            approx = char_periodic_eval(spec, x)
            assert complex(exact) == pytest.approx(complex(approx), abs=1e-12)

    def test_exact_boundary_values(self) -> None:
        exact = boundary_values_exact(CHI5_COMPLEX, 4)
        approx = boundary_values(CHI5_COMPLEX, 4)
        assert [complex(v) for v in exact] == pytest.approx([complex(v) for v in approx], abs=1e-12)
        assert boundary_values_exact(CHI3, 3) == boundary_values(CHI3, 3)

    def test_exact_path_rejects_sextic_values(self) -> None:
        with pytest.raises(EulerFunctionError, match="outside Q"):
            char_periodic_exact(euler_spec(2, enumerate_characters(9)[1]), 0)

    @pytest.mark.parametrize("l", [1, 2, 3])
    def test_magnitude_bound_holds(self, l: int) -> None:  # noqa: E741
        bound = magnitude_bound(l, 3)
        kernel = char_periodic_kernel(euler_spec(l, CHI3))
        grid = np.linspace(-6.0, 6.0, 601)
        assert np.max(np.abs(kernel(grid))) <= bound

    def test_magnitude_bound_order_zero_raises(self) -> None:
        with pytest.raises(EulerFunctionError, match="l >= 1"):
            magnitude_bound(0, 3)


class TestKernels:
    """Tests for the vectorized kernels against exact evaluation."""

    POINTS = (-4.75, -1.0, 0.0, 0.3125, 1.0, 2.5, 5.0, 7.875)

    @pytest.mark.parametrize("m", [0, 1, 3])
    @pytest.mark.parametrize("side", ["right", "left", "mid"])
    def test_char_euler_kernel_matches_exact(self, m: int, side: str) -> None:
        spec = euler_spec(m, CHI3)
        kernel = char_periodic_kernel(spec, side)
        got = kernel(np.array(self.POINTS))
        expected = [float(char_periodic_eval(spec, Fraction(x), side)) for x in self.POINTS]
        np.testing.assert_allclose(got, expected, rtol=1e-12, atol=1e-12)

    @pytest.mark.parametrize("m", [1, 2])
    def test_char_bernoulli_kernel_matches_exact(self, m: int) -> None:
        spec = bernoulli_spec(m, CHI3)
        kernel = char_periodic_kernel(spec)
        got = kernel(np.array(self.POINTS))
        expected = [float(char_periodic_eval(spec, Fraction(x))) for x in self.POINTS]
        np.testing.assert_allclose(got, expected, rtol=1e-12, atol=1e-12)

    def test_complex_kernel_matches_exact(self) -> None:
        spec = euler_spec(2, CHI5_COMPLEX)
        kernel = char_periodic_kernel(spec)
        got = kernel(np.array(self.POINTS))
        expected = [complex(char_periodic_eval(spec, Fraction(x))) for x in self.POINTS]
        np.testing.assert_allclose(got, expected, rtol=1e-12, atol=1e-12)

    def test_periodic_kernel(self) -> None:
        kernel = periodic_kernel(KIND_EULER, 2)
        got = kernel(np.array([0.25, 1.25, 2.0]))
        expected = [float(periodic_eval(KIND_EULER, 2, Fraction(x))) for x in (0.25, 1.25, 2.0)]
        np.testing.assert_allclose(got, expected, rtol=1e-14, atol=1e-15)

    def test_bernoulli_one_kernel_at_integers(self) -> None:
        kernel = periodic_kernel(KIND_BERNOULLI, 1)
        np.testing.assert_allclose(kernel(np.array([0.0, 2.0, 0.5])), [0.0, 0.0, 0.0], atol=1e-15)

    def test_kernel_preserves_shape(self) -> None:
        kernel = char_periodic_kernel(euler_spec(1, CHI3))
        assert kernel(np.zeros((2, 3))).shape == (2, 3)
