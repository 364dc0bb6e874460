"""Tests for boolechar.formulas.genfun."""

from __future__ import annotations

import numpy as np
import pytest

from boolechar.arith.characters import DirichletCharacter, enumerate_characters
from boolechar.formulas.genfun import gf_coefficients, gf_expected, kernel_function
from boolechar.formulas.lfunc import LFunctionError
from boolechar.shared.constants import VALID_KERNELS

CHI3 = enumerate_characters(3)[1]
CHI5_REAL = enumerate_characters(5)[2]


class TestGeneratingFunctions:
    """Tests for the kernel coefficient extraction."""

    @pytest.mark.parametrize("chi", [CHI3, CHI5_REAL])
    @pytest.mark.parametrize("kernel", sorted(VALID_KERNELS))
    def test_coefficients_match_boundary_values(
        self, chi: DirichletCharacter, kernel: str
    ) -> None:
        got = gf_coefficients(kernel, chi, 8)
        expected = gf_expected(kernel, chi, 8)
        for j, (g, e) in enumerate(zip(got, expected)):
            assert abs(g - e) <= 1e-9 * max(1.0, abs(e)), (kernel, j)

    def test_complex_character_exp_kernel(self) -> None:
        chi = enumerate_characters(5)[1]
        got = gf_coefficients("exp", chi, 6)
        expected = gf_expected("exp", chi, 6)
        assert all(isinstance(g, complex) for g in got)
        np.testing.assert_allclose(got, expected, rtol=1e-9, atol=1e-9)

    def test_exp_kernel_constant_term(self) -> None:
        assert gf_expected("exp", CHI3, 0) == [-2.0]
        value = kernel_function("exp", CHI3)(np.array([0j]))
        assert value[0] == pytest.approx(-2.0)

    def test_odd_character_cos_kernel_selects_even_indices(self) -> None:
        expected = gf_expected("cos", CHI3, 5)
        assert expected[1] == expected[3] == expected[5] == 0

    def test_unknown_kernel_raises(self) -> None:
        with pytest.raises(LFunctionError, match="Unknown kernel"):
            gf_coefficients("tan", CHI3, 4)

    def test_negative_order_raises(self) -> None:
        with pytest.raises(LFunctionError, match="order"):
            gf_expected("exp", CHI3, -1)
