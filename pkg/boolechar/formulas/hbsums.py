"""Hardy-Berndt sums, their character analogues and reciprocity defects.

Characters with values in Q(i) are handled exactly: Fractions for real
characters and GaussianRationals for those taking the values ±i, so a
reciprocity defect is exact. Other complex characters go through the
vectorized float kernels and are compared with a scaled tolerance.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from boolechar.arith.characters import DirichletCharacter, GaussianRational, conjugate
from boolechar.arith.eulerfun import (
    CharPeriodicSpec,
    bernoulli_number,
    bernoulli_spec,
    boundary_values,
    boundary_values_exact,
    char_euler_at_zero,
    char_periodic_exact,
    char_periodic_kernel,
    euler_at_zero,
    euler_spec,
    periodic_eval,
)
from boolechar.arith.numeric import QuadratureSpec, quadrature
from boolechar.shared.constants import (
    CONVENTION_DEFINITION,
    CONVENTION_PROOF,
    DEFAULT_COMPLEX_RECIP_TOL,
    KIND_EULER,
    VALID_CONVENTIONS,
)

logger = logging.getLogger(__name__)

Value = Fraction | GaussianRational | complex


class HardyBerndtError(Exception):
    """Base class for Hardy-Berndt sum failures."""


class HypothesisViolationError(HardyBerndtError):
    """Raised when a reciprocity law is asked for parameters outside its hypotheses."""


class ParameterRangeError(HardyBerndtError):
    """Raised when a closed form has no branch for the given parameters."""


@dataclass(frozen=True)
class HBParams:
    """Parameters of S_p(b, c : χ), S_p^(1) and S_p^(2)."""

    p: int
    b: int
    c: int
    character: DirichletCharacter
    convention: str = CONVENTION_PROOF
    exact: bool = True

    def __post_init__(self) -> None:
        if self.p < 0:
            raise HardyBerndtError(f"p must be >= 0, got {self.p}")
        if self.b < 1 or self.c < 1:
            raise HardyBerndtError(f"b and c must be positive, got b={self.b}, c={self.c}")
        if self.convention not in VALID_CONVENTIONS:
            raise HardyBerndtError(
                f"Unknown convention '{self.convention}'. "
                f"Must be one of: {sorted(VALID_CONVENTIONS)}"
            )
        chi = self.character
        if chi.modulus < 2 or chi.modulus % 2 == 0 or not chi.is_primitive:
            raise HardyBerndtError(f"character {chi.label} must be primitive with odd modulus")

    @property
    def k(self) -> int:
        return self.character.modulus

    @property
    def uses_exact(self) -> bool:
        return self.exact and self.character.is_gaussian

    def swapped(self) -> HBParams:
        return HBParams(self.p, self.c, self.b, self.character, self.convention, self.exact)

    def with_character(self, chi: DirichletCharacter) -> HBParams:
        return HBParams(self.p, self.b, self.c, chi, self.convention, self.exact)


def _chi(chi: DirichletCharacter, n: int, exact: bool) -> Value:
    return chi.exact(n) if exact else chi.embed(n)


def _char_sum(
    spec: CharPeriodicSpec, weights: list[Value], points: list[Fraction], exact: bool
) -> Value:
    """Σ w_i F(x_i) for a character periodic function F."""
    if exact:
        return sum(
            (w * char_periodic_exact(spec, x) for w, x in zip(weights, points) if w != 0),
            start=Fraction(0),
        )
    values = char_periodic_kernel(spec)(np.array([float(x) for x in points]))
    return complex(np.dot(np.array(weights, dtype=complex), values))


def hardy_S(b: int, c: int) -> int:  # noqa: N802
    """S(b, c) = Σ_{n=1}^{c-1} (-1)^{n+1+floor(bn/c)}."""
    if b < 1 or c < 1:
        raise HardyBerndtError(f"b and c must be positive, got b={b}, c={c}")
    return sum((-1) ** (n + 1 + (b * n) // c) for n in range(1, c))


@dataclass
class SChiResult:
    """S_p(b, c : χ) by its definition and by the Bernoulli/Euler split."""

    definition: Value
    modified: Value
    bernoulli_part: Value
    euler_part: Value

    @property
    def defect(self) -> Value:
        return self.definition - self.modified


def S_chi(params: HBParams) -> SChiResult:  # noqa: N802
    """S_p(b, c : χ) = Σ_{n=1}^{ck} χ(n) B̄_{p,χ̄}(n(b+ck)/2c).

    The modified form is conj(χ)(2) 2^{-p} [T - (p/2) U] with
    T = Σ χ(n) B̄_{p,χ̄}(nb/c) and U = Σ (-1)^n χ(n) Ē_{p-1,χ̄}(nb/c).
    """
    p, b, c, k = params.p, params.b, params.c, params.k
    if p < 1:
        raise HardyBerndtError(f"S_chi needs p >= 1, got {p}")
    chi = params.character
    exact = params.uses_exact
    chi_bar = conjugate(chi)
    top = c * k
    weights = [_chi(chi, n, exact) for n in range(1, top + 1)]

    shifted = [Fraction(n * (b + c * k), 2 * c) for n in range(1, top + 1)]
    definition = _char_sum(bernoulli_spec(p, chi_bar), weights, shifted, exact)

    points = [Fraction(n * b, c) for n in range(1, top + 1)]
    bern = _char_sum(bernoulli_spec(p, chi_bar), weights, points, exact)
    signed = [(-1) ** n * w for n, w in enumerate(weights, start=1)]
    euler = _char_sum(euler_spec(p - 1, chi_bar), signed, points, exact)

    two_bar = _chi(chi, 2, exact).conjugate()
    modified = two_bar * (bern - Fraction(p, 2) * euler) / 2**p
    return SChiResult(definition, modified, bern, euler)


def bernoulli_closed_term(p: int, b: int, c: int, chi: DirichletCharacter) -> Fraction:
    """Closed value of Σ_{n<=ck} χ(n) B̄_{p,χ̄}(nb/c): c^{1-p} χ(c) χ(-b) (k^p - 1) B_p.

    Zero for odd p. The even case needs real χ, prime k and gcd(b, c) = 1.
    """
    if p < 1:
        raise ParameterRangeError(f"p must be >= 1, got {p}")
    if p % 2:
        return Fraction(0)
    k = chi.modulus
    if not chi.is_real or not is_prime(k) or math.gcd(b, c) != 1:
        raise ParameterRangeError(
            f"closed term needs a real character of prime modulus and gcd(b, c) = 1, "
            f"got {chi.label}, b={b}, c={c}"
        )
    return (
        Fraction(1, c ** (p - 1)) * chi.rational(c) * chi.rational(-b)
        * (k**p - 1) * bernoulli_number(p)
    )


def is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


def _convention_sum(params: HBParams, terms: list[Value], zero_term: Value) -> Value:
    total = sum(terms, start=Fraction(0) if params.uses_exact else 0j)
    if params.convention == CONVENTION_PROOF:
        return 2 * (total + zero_term)
    return total


def S1(params: HBParams) -> Value:  # noqa: N802
    """S_p^(1)(b, c : χ) = Σ_{n=1}^{ck} (-1)^n Ē_{p,χ̄}(bn/c).

    The proof form is 2 Σ_{n=0}^{ck}.
    """
    p, b, c, k = params.p, params.b, params.c, params.k
    exact = params.uses_exact
    spec = euler_spec(p, conjugate(params.character))
    points = [Fraction(n * b, c) for n in range(0, c * k + 1)]
    signs: list[Value] = [Fraction((-1) ** n) if exact else complex((-1) ** n)
                          for n in range(0, c * k + 1)]
    zero = _char_sum(spec, signs[:1], points[:1], exact)
    body = _char_sum(spec, signs[1:], points[1:], exact)
    return _convention_sum(params, [body], zero)


def S2(params: HBParams) -> Value:  # noqa: N802
    """S_p^(2)(b, c : χ) = Σ_{n=1}^{ck} (-1)^n χ(n) Ē_p(bn/c); the proof form doubles it."""
    p, b, c, k = params.p, params.b, params.c, params.k
    exact = params.uses_exact
    chi = params.character
    terms: list[Value] = []
    for n in range(1, c * k + 1):
        weight = _chi(chi, n, exact)
        if weight == 0:
            continue
        value = periodic_eval(KIND_EULER, p, Fraction(n * b, c))
        terms.append((-1) ** n * weight * (value if exact else float(value)))
    return _convention_sum(params, terms, Fraction(0) if exact else 0j)


@dataclass
class ReciprocityReport:
    """Both sides of a reciprocity law."""

    lhs: Value
    rhs: Value
    convention: str
    exact: bool
    tol: float = DEFAULT_COMPLEX_RECIP_TOL
    scale: float = 1.0
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def defect(self) -> Value:
        return self.lhs - self.rhs

    @property
    def passed(self) -> bool:
        if self.exact:
            return self.defect == 0
        return abs(self.defect) <= self.tol * self.scale


def _boundary(chi: DirichletCharacter, upto: int, exact: bool) -> list[Value]:
    if exact:
        return list(boundary_values_exact(chi, upto))
    return [complex(v) for v in boundary_values(chi, upto)]


def recip2_defect(params: HBParams) -> ReciprocityReport:
    """c^p S_p^(1)(b, c) + b^p S_p^(2)(c, b : χ)
    = 2 Σ_j C(p, j) c^j b^{p-j} Ē_{j,χ̄}(0) E_{p-j}(0).

    Needs b + c odd and χ(-1)(-1)^p = 1. The proof convention sums
    Ē_{p,χ̄} in S^(1); the definition convention uses conj(χ) there.
    """
    p, b, c = params.p, params.b, params.c
    chi = params.character
    if p < 1:
        raise HypothesisViolationError(f"recip2 needs p >= 1, got {p}")
    if (b + c) % 2 == 0:
        raise HypothesisViolationError(f"recip2 needs b + c odd, got b={b}, c={c}")
    if chi.sign * (-1) ** p != 1:
        raise HypothesisViolationError(
            f"recip2 needs χ(-1)(-1)^p = 1, got p={p} with {chi.parity} {chi.label}"
        )
    exact = params.uses_exact
    first = params if params.convention == CONVENTION_PROOF else params.with_character(
        conjugate(chi)
    )
    s1 = S1(first)
    s2 = S2(params.swapped())
    lhs = c**p * s1 + b**p * s2

    e = _boundary(chi, p, exact)
    rhs = 2 * sum(
        (
            math.comb(p, j) * c**j * b ** (p - j) * e[j] * euler_at_zero(p - j)
            for j in range(p + 1)
        ),
        start=Fraction(0) if exact else 0j,
    )
    scale = max(1.0, abs(c**p * s1), abs(b**p * s2), abs(rhs))
    report = ReciprocityReport(lhs, rhs, params.convention, exact, scale=scale)
    logger.debug("recip2 p=%d b=%d c=%d %s: defect %s", p, b, c, chi.label, report.defect)
    return report


def recip1_defect(params: HBParams) -> ReciprocityReport:
    """χ(-2)[b c^p S_p(b, c : χ) + c b^p S_p(c, b : χ)] against
    (p/2^{p+1}) Σ_{j<p} (-1)^j C(p-1, j) b^{j+1} c^{p-j} Ē_{j,χ̄}(0) Ē_{p-1-j,χ̄}(0).

    Needs p > 1 odd and b + c odd. The printed right side, with the
    opposite sign, is kept in ``meta["printedRhs"]``; the sums through the
    modified form are kept in ``meta["modifiedLhs"]``.
    """
    p, b, c = params.p, params.b, params.c
    chi = params.character
    if p <= 1 or p % 2 == 0:
        raise HypothesisViolationError(f"recip1 needs odd p > 1, got {p}")
    if (b + c) % 2 == 0:
        raise HypothesisViolationError(f"recip1 needs b + c odd, got b={b}, c={c}")
    exact = params.uses_exact
    forward = S_chi(params)
    backward = S_chi(params.swapped())
    unit = _chi(chi, -2, exact)
    first = b * c**p * forward.definition
    second = c * b**p * backward.definition
    lhs = unit * (first + second)
    modified = unit * (b * c**p * forward.modified + c * b**p * backward.modified)

    e = _boundary(chi, p, exact)
    rhs = Fraction(p, 2 ** (p + 1)) * sum(
        (
            (-1) ** j * math.comb(p - 1, j) * b ** (j + 1) * c ** (p - j) * e[j] * e[p - 1 - j]
            for j in range(p)
        ),
        start=Fraction(0) if exact else 0j,
    )

    # Ē_{j-1,χ}(0) is the boundary value of conj(χ)
    e_plain = _boundary(conjugate(chi), p, exact)
    printed = Fraction(p, 2 ** (p + 1)) * sum(
        (
            (-1) ** j * math.comb(p - 1, j - 1) * c**j * b ** (p + 1 - j)
            * e_plain[j - 1] * e[p - j]
            for j in range(1, p + 1)
        ),
        start=Fraction(0) if exact else 0j,
    )
    scale = max(1.0, abs(first), abs(second), abs(rhs))
    meta = {"printedRhs": printed, "modifiedLhs": modified}
    return ReciprocityReport(lhs, rhs, CONVENTION_DEFINITION, exact, scale=scale, meta=meta)


def alternating_euler_sum(
    p: int, b: int, c: int, chi: DirichletCharacter, psi: DirichletCharacter
) -> Value:
    """A_{χ,ψ}(b, c) = Σ_{n=1}^{ck} (-1)^n χ(n) Ē_{p-1,ψ}(nb/c).

    χ and ψ share the modulus.
    """
    if p < 1:
        raise HardyBerndtError(f"p must be >= 1, got {p}")
    if chi.modulus != psi.modulus:
        raise HardyBerndtError(f"moduli differ: {chi.modulus} and {psi.modulus}")
    exact = chi.is_gaussian and psi.is_gaussian
    top = c * chi.modulus
    weights = [(-1) ** n * _chi(chi, n, exact) for n in range(1, top + 1)]
    points = [Fraction(n * b, c) for n in range(1, top + 1)]
    return _char_sum(euler_spec(p - 1, psi), weights, points, exact)


def alternating_lemma_defect(
    p: int, b: int, c: int, chi: DirichletCharacter, psi: DirichletCharacter
) -> Value:
    """χ(-1) c^{p-1} A_{χ,ψ}(b, c) - (-1)^p ψ(-1) b^{p-1} A_{ψ̄,χ̄}(c, b)
    + Σ_j (-1)^j C(p-1, j) b^j c^{p-1-j} Ē_{j,χ̄}(0) Ē_{p-1-j,ψ}(0), for b + c odd.
    """
    if (b + c) % 2 == 0:
        raise HypothesisViolationError(f"needs b + c odd, got b={b}, c={c}")
    forward = alternating_euler_sum(p, b, c, chi, psi)
    backward = alternating_euler_sum(p, c, b, conjugate(psi), conjugate(chi))
    lhs = chi.sign * c ** (p - 1) * forward - (-1) ** p * psi.sign * b ** (p - 1) * backward
    total: Value = sum(
        (
            (-1) ** j * math.comb(p - 1, j) * b**j * c ** (p - 1 - j)
            * char_euler_at_zero(j, chi) * char_euler_at_zero(p - 1 - j, conjugate(psi))
            for j in range(p)
        ),
        start=Fraction(0),
    )
    return lhs + total


@dataclass
class IntegralReport:
    """Quadrature of a product integral against its closed form."""

    value: complex | float
    closed_form: Value
    quad_error: float
    branch: str

    @property
    def defect(self) -> complex:
        return complex(self.value) - complex(self.closed_form)


def _closed_integral(
    l: int, p: int, b: int, c: int, chi: DirichletCharacter  # noqa: E741
) -> tuple[Value, str]:
    if p % 2 and (b + c) % 2 == 0:
        return Fraction(0), "odd-p"
    if p % 2:
        raise ParameterRangeError(f"no closed form for odd p={p} with b + c odd")
    scale = math.comb(p - 2, l) * (p - 1)
    if (b + c) % 2:
        total: Value = sum(
            (
                (-1) ** j * math.comb(p - 1, j) * Fraction(b, c) ** j
                * char_euler_at_zero(j, chi) * char_euler_at_zero(p - 1 - j, conjugate(chi))
                for j in range(l + 1)
            ),
            start=Fraction(0),
        )
        return 2 * (-1) ** (l + 1) * Fraction(c**l, scale * b ** (l + 1)) * total, "mixed"
    k = chi.modulus
    if not chi.is_real or not is_prime(k) or math.gcd(b, c) != 1:
        raise ParameterRangeError(
            f"the even-even branch needs a real character of prime modulus and gcd(b, c) = 1, "
            f"got {chi.label}, b={b}, c={c}"
        )
    value = (
        2 * (-1) ** (l + 1) * chi.rational(c) * chi.rational(b) * (k**p - 1) * euler_at_zero(p - 1)
        / (c ** (p - 1 - l) * b ** (l + 1) * scale)
    )
    return value, "even-even"


def euler_integral_closed(
    l: int, p: int, b: int, c: int, chi: DirichletCharacter  # noqa: E741
) -> IntegralReport:
    """∫_0^k Ē_{l,χ̄}(cx) Ē_{p-2-l,χ}(bx) dx by quadrature and in closed form."""
    if not 0 <= l <= p - 2:
        raise ParameterRangeError(f"needs 0 <= l <= p - 2, got l={l}, p={p}")
    if b < 1 or c < 1:
        raise ParameterRangeError(f"b and c must be positive, got b={b}, c={c}")
    closed, branch = _closed_integral(l, p, b, c, chi)

    k = chi.modulus
    left = char_periodic_kernel(euler_spec(l, conjugate(chi)))
    right = char_periodic_kernel(euler_spec(p - 2 - l, chi))
    points = {i / c for i in range(1, c * k)} | {i / b for i in range(1, b * k)}
    spec = QuadratureSpec.with_breakpoints(0.0, float(k), points)
    result = quadrature(lambda x: left(c * x) * right(b * x), spec)
    value: complex | float = result.value
    if chi.is_real:
        value = complex(value).real
    logger.debug("closing integral l=%d p=%d b=%d c=%d: %s branch", l, p, b, c, branch)
    return IntegralReport(value, closed, result.error, branch)
