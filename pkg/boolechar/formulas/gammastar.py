"""Character analogues of the gamma and digamma functions.

log Γ*(a, χ) = Σ_{n>=1} (-1)^n χ(n) log(n/(n+a)) for a real primitive χ,
and ψ*(a, χ) = (1/2k) Σ_{n<2k} (-1)^n χ(n) ψ((n+a)/2k), its derivative.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from boolechar.arith.characters import DirichletCharacter, conjugate
from boolechar.arith.eulerfun import boundary_values, char_periodic_eval, euler_spec
from boolechar.arith.numeric import log_gamma, polygamma
from boolechar.formulas.lfunc import (
    LFunctionError,
    PoleProximityError,
    RouteDomainError,
    check_character,
    ell_derivative0,
    ell_prime_zero,
    ell_prime_zero_integral,
    ell_value,
    ell_zero,
    signed_values,
    tail_integral,
)
from boolechar.shared.constants import (
    GAMMA_ROUTE_LOG_FORMULA,
    GAMMA_ROUTE_PARTIAL_PRODUCT,
    GAMMA_ROUTE_QUOTIENT,
    ROUTE_HURWITZ,
    VALID_GAMMA_ROUTES,
)

logger = logging.getLogger(__name__)

DEFAULT_PRODUCT_TERMS = 100_000
POLE_DISTANCE = 1e-9
RICHARDSON_STEP = 1e-4


@dataclass(frozen=True)
class GammaStarQuery:
    """One evaluation of log Γ*(a, χ) by a named route."""

    a: float
    character: DirichletCharacter
    route: str = GAMMA_ROUTE_QUOTIENT
    terms: int = DEFAULT_PRODUCT_TERMS

    def __post_init__(self) -> None:
        if self.route not in VALID_GAMMA_ROUTES:
            raise LFunctionError(
                f"Unknown route '{self.route}'. Must be one of: {sorted(VALID_GAMMA_ROUTES)}"
            )
        check_character(self.character)
        if not self.character.is_real:
            raise LFunctionError(f"Γ* needs a real character, got {self.character.label}")
        if self.a < 0:
            raise RouteDomainError(f"a must be >= 0, got {self.a}")
        if self.terms < 1:
            raise LFunctionError(f"terms must be >= 1, got {self.terms}")


def _quotient(a: float, chi: DirichletCharacter) -> float:
    period = 2 * chi.modulus
    c = signed_values(chi)
    return float(
        sum(
            c[n] * (log_gamma((n + a) / period) - log_gamma(n / period))
            for n in range(1, period)
            if c[n]
        )
    )


def _partial_product(a: float, chi: DirichletCharacter, terms: int) -> float:
    n = np.arange(1, terms + 1)
    c = signed_values(chi)[n % (2 * chi.modulus)]
    return float(-np.sum(c * np.log1p(a / n)))


def _log_formula(a: float, chi: DirichletCharacter) -> float:
    """2 log Γ* = -Ē_{0,χ̄}(0) log a - 2ℓ'(0) - χ(-1) Ē_{1,χ̄}(0)/a
    + χ(-1) ∫_0^∞ Ē_{1,χ̄}(x)(x+a)^{-2} dx.
    """
    e0, e1 = (float(v) for v in boundary_values(chi, 1))
    integral = tail_integral(chi, 1, -2 + 0j, a, 0.0).real
    twice = -e0 * math.log(a) - chi.sign * e1 / a + chi.sign * integral
    return twice / 2 - float(ell_prime_zero_integral(chi).real)


def gamma_star(q: GammaStarQuery) -> float:
    """log Γ*(a, χ)."""
    if q.a == 0:
        return 0.0
    if q.route == GAMMA_ROUTE_QUOTIENT:
        value = _quotient(q.a, q.character)
    elif q.route == GAMMA_ROUTE_PARTIAL_PRODUCT:
        value = _partial_product(q.a, q.character, q.terms)
    else:
        if q.a <= 0:
            raise RouteDomainError(f"{GAMMA_ROUTE_LOG_FORMULA} route needs a > 0, got {q.a}")
        value = _log_formula(q.a, q.character)
    logger.debug("log Γ*(%s, %s) by %s = %s", q.a, q.character.label, q.route, value)
    return value


def psi_star(a: float, chi: DirichletCharacter, m: int = 0) -> complex | float:
    """m-th derivative of ψ*(a, χ) = (2k)^{-m-1} Σ c_n ψ^{(m)}((n+a)/2k)."""
    check_character(chi)
    if a <= 0:
        raise RouteDomainError(f"psi_star needs a > 0, got {a}")
    period = 2 * chi.modulus
    c = signed_values(chi)
    total = sum(
        (c[n] * polygamma(m, (n + a) / period) for n in range(1, period) if c[n]),
        start=0j,
    )
    value = complex(total) / period ** (m + 1)
    return value.real if chi.is_real else value


def psi_star_at_zero(chi: DirichletCharacter, h: float = RICHARDSON_STEP) -> complex | float:
    """ψ*(0⁺, χ) by three-point Richardson extrapolation 3f(h) - 3f(2h) + f(3h)."""
    return 3 * psi_star(h, chi) - 3 * psi_star(2 * h, chi) + psi_star(3 * h, chi)


def lerch_defect(a: float, chi: DirichletCharacter) -> float:
    """ℓ'(0, a, χ) - log Γ*(a, χ) - ℓ'(0, χ), with ℓ'(0, a) from its integral form."""
    derivative = float(ell_derivative0(a, chi).integral_route.real)
    log_gamma_star = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_QUOTIENT))
    return derivative - log_gamma_star - float(ell_prime_zero(chi).real)


def taylor_defect(a: float, z: float, chi: DirichletCharacter, terms: int = 25) -> complex:
    """Σ_{m=2}^{M} ℓ(m, a) z^{m-1} - (ψ*(a) - ψ*(a - z))."""
    series = sum(
        (ell_value(m, a, chi, ROUTE_HURWITZ) * z ** (m - 1) for m in range(2, terms + 1)),
        start=0j,
    )
    return series - complex(psi_star(a, chi) - psi_star(a - z, chi))


@dataclass
class AsymptoticReport:
    """A truncated asymptotic expansion with the size of its first omitted term."""

    value: float
    terms: list[float] = field(default_factory=list)
    error_proxy: float = 0.0


def _first_nonzero(values: list[float]) -> float:
    for v in values:
        if v != 0:
            return abs(v)
    return 0.0


def stirling_log_gamma_star(a: float, chi: DirichletCharacter, order: int) -> AsymptoticReport:
    """log Γ*(a) ~ -ℓ(0) log a - ℓ'(0) - (χ(-1)/2) Σ_{j<=J} Ē_{j,χ̄}(0)/(j a^j)."""
    check_character(chi)
    if a <= 0 or order < 1:
        raise RouteDomainError(f"stirling needs a > 0 and J >= 1, got a={a}, J={order}")
    # odd-index or even-index terms vanish by parity; look far enough for a nonzero one
    values = [float(v) for v in boundary_values(chi, order + 2)]

    def term(j: int) -> float:
        return -chi.sign / 2 * values[j] / (j * a**j)

    terms = [term(j) for j in range(1, order + 1)]
    base = -float(ell_zero(chi)) * math.log(a) - float(ell_prime_zero(chi).real)
    proxy = _first_nonzero([term(j) for j in range(order + 1, order + 3)])
    return AsymptoticReport(value=base + sum(terms), terms=terms, error_proxy=proxy)


def weierstrass_partial(s: float, chi: DirichletCharacter, terms: int) -> float:
    """-s ℓ(1, χ) + Σ_{n<=N} c_n (s/n - log(1 + s/n)), the log of the N-term product."""
    check_character(chi)
    if not chi.is_real:
        raise LFunctionError(f"Weierstrass product needs a real character, got {chi.label}")
    if s == 0:
        return 0.0
    n = np.arange(1, terms + 1)
    c = signed_values(chi)[n % (2 * chi.modulus)]
    near = (np.abs(s + n) < POLE_DISTANCE) & (c != 0)
    if near.any():
        raise PoleProximityError(f"s={s} is within {POLE_DISTANCE} of -{int(n[near][0])}")
    ratio = s / n
    partial = float(np.sum(c * (ratio - np.log(np.abs(1 + ratio)))))
    return -s * float(ell_value(1, 0.0, chi).real) + partial


def log_mean_defect(t: float, chi: DirichletCharacter, order: int) -> float:
    """Absolute error of the log-mean expansion at t.

    |2 Σ_{n<t} c_n log(t/n) - [2ℓ'(0) + 2ℓ(0) log t + χ(-1) Σ_{j<=J} Ē_{j,χ̄}(t)/(j t^j)]|
    """
    check_character(chi)
    if t <= 1 or float(t).is_integer():
        raise RouteDomainError(f"log mean needs a non-integer t > 1, got {t}")
    if not chi.is_real:
        raise LFunctionError(f"log mean expansion needs a real character, got {chi.label}")
    n = np.arange(1, math.ceil(t))
    c = signed_values(chi)[n % (2 * chi.modulus)]
    lhs = 2 * float(np.sum(c * np.log(t / n)))

    chi_bar = conjugate(chi)
    point = Fraction(t)
    expansion = sum(
        float(char_periodic_eval(euler_spec(j, chi_bar), point)) / (j * t**j)
        for j in range(1, order + 1)
    )
    rhs = (
        2 * float(ell_prime_zero(chi).real)
        + 2 * float(ell_zero(chi)) * math.log(t)
        + chi.sign * expansion
    )
    return abs(lhs - rhs)
