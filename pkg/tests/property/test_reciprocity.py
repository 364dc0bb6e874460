"""Property-based tests for the character Hardy-Berndt reciprocity laws."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from boolechar.arith.characters import DirichletCharacter, real_primitive_characters
from boolechar.formulas.hbsums import S1, S2, HBParams, S_chi, hardy_S, recip2_defect
from boolechar.shared.constants import CONVENTION_DEFINITION, CONVENTION_PROOF

_real_character = st.sampled_from(
    [chi for k in (3, 5, 7) for chi in real_primitive_characters(k)]
)
_positive = st.integers(min_value=1, max_value=6)


@pytest.mark.property
class TestReciprocityProperties:
    """Exact reciprocity for real characters over random parameters."""

    @settings(max_examples=60, deadline=None)
    @given(chi=_real_character, p=st.integers(1, 5), b=_positive, c=_positive)
    def test_recip2_defect_is_exactly_zero(
        self, chi: DirichletCharacter, p: int, b: int, c: int
    ) -> None:
        assume((b + c) % 2 == 1)
        assume(chi.sign * (-1) ** p == 1)
        report = recip2_defect(HBParams(p, b, c, chi, CONVENTION_PROOF))
        assert isinstance(report.lhs, Fraction)
        assert report.lhs - report.rhs == 0

    @settings(max_examples=60, deadline=None)
    @given(chi=_real_character, p=st.integers(1, 5), b=_positive, c=_positive)
    def test_sums_are_exact_for_real_characters(
        self, chi: DirichletCharacter, p: int, b: int, c: int
    ) -> None:
        result = S_chi(HBParams(p, b, c, chi))
        assert isinstance(result.definition, Fraction)

    @settings(max_examples=100, deadline=None)
    @given(b=st.integers(1, 60), c=st.integers(1, 60))
    def test_hardy_sum_bounded_by_length(self, b: int, c: int) -> None:
        assert abs(hardy_S(b, c)) <= max(c - 1, 0)

    @settings(max_examples=40, deadline=None)
    @given(
        chi=_real_character,
        p=st.integers(1, 5),
        b=_positive,
        c=_positive,
        shift=st.integers(1, 2),
        convention=st.sampled_from([CONVENTION_PROOF, CONVENTION_DEFINITION]),
    )
    def test_sums_absorb_period_shift_of_b(
        self, chi: DirichletCharacter, p: int, b: int, c: int, shift: int, convention: str
    ) -> None:
        base = HBParams(p, b, c, chi, convention)
        moved = HBParams(p, b + 2 * c * chi.modulus * shift, c, chi, convention)
        assert S1(moved) == S1(base)
        assert S2(moved) == S2(base)
        assert S_chi(moved) == S_chi(base)
