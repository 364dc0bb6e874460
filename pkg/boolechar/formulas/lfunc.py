"""The alternating Dirichlet L-function ℓ(s, a, χ) = Σ_{n>=1} (-1)^n χ(n) (n+a)^{-s}.

Three routes evaluate it: a blocked partial sum with an asymptotic tail
correction, a finite Hurwitz-zeta combination, and the integral
representation with a character Euler kernel. Special values and the
derivative at s = 0 are here as well; Γ* and ψ* live in ``gammastar``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import numpy as np
from numpy.typing import NDArray

from boolechar.arith.characters import DirichletCharacter, conjugate
from boolechar.arith.eulerfun import (
    boundary_values,
    char_euler_poly,
    char_periodic_eval,
    char_periodic_kernel,
    euler_spec,
)
from boolechar.arith.numeric import (
    QuadratureSpec,
    digamma,
    ensure_finite,
    falling_factorial,
    hurwitz_zeta,
    log_gamma,
    quadrature,
)
from boolechar.shared.constants import (
    DEFAULT_ROUTE_TOL,
    ROUTE_HURWITZ,
    ROUTE_INTEGRAL,
    ROUTE_SERIES,
    SERIES_BLOCKS,
    SERIES_TAIL_TERMS,
    TAIL_IBP_TERMS,
    TAIL_PERIODS,
    VALID_ROUTES,
)

logger = logging.getLogger(__name__)


class LFunctionError(Exception):
    """Base class for L-function evaluation failures."""


class RouteDomainError(LFunctionError):
    """Raised when a route is asked for a point outside its domain."""


class ParityConditionError(LFunctionError):
    """Raised when a closed form needs a parity the character lacks."""


class PoleProximityError(LFunctionError):
    """Raised when a product is evaluated too close to one of its poles."""


def check_character(chi: DirichletCharacter) -> None:
    """ℓ needs a primitive character with odd modulus k > 1."""
    if chi.modulus < 2 or chi.modulus % 2 == 0 or not chi.is_primitive:
        raise LFunctionError(
            f"character {chi.label} must be primitive with an odd modulus > 1"
        )


def signed_values(chi: DirichletCharacter) -> NDArray[Any]:
    """c_n = (-1)^n χ(n) for n = 0..2k-1; real dtype for real χ."""
    k = chi.modulus
    n = np.arange(2 * k)
    c = np.where(n % 2, -1.0, 1.0) * chi.complex_table[n % k]
    return c.real if chi.is_real else c


def _boundary(chi: DirichletCharacter, upto: int) -> list[complex]:
    return [complex(v) for v in boundary_values(chi, upto)]


def auto_order(s: complex) -> int:
    """Smallest safe truncation order for the integral route at ℓ(s)."""
    return max(3, math.ceil((-complex(s)).real) + 2)


@dataclass(frozen=True)
class LQuery:
    """One evaluation of ℓ(s, a, χ) by a named route."""

    s: complex
    a: float
    character: DirichletCharacter
    method: str = ROUTE_SERIES
    order: int | None = None
    tol: float = DEFAULT_ROUTE_TOL

    def __post_init__(self) -> None:
        if self.method not in VALID_ROUTES:
            raise LFunctionError(
                f"Unknown route '{self.method}'. Must be one of: {sorted(VALID_ROUTES)}"
            )
        check_character(self.character)
        if self.tol <= 0:
            raise LFunctionError(f"tol must be > 0, got {self.tol}")
        if self.a <= -1:
            raise RouteDomainError(f"a must be > -1, got {self.a}")
        if self.order is not None and self.order <= (-complex(self.s)).real:
            raise RouteDomainError(
                f"order {self.order} must exceed Re(-s) = {(-complex(self.s)).real}"
            )

    @property
    def truncation(self) -> int:
        return self.order if self.order is not None else auto_order(self.s)


def tail_integral(
    chi: DirichletCharacter, m: int, exponent: complex, a: float, start: float
) -> complex:
    """∫_start^∞ Ē_{m,χ̄}(t) (t+a)^exponent dt.

    Quadrature up to a multiple T of 2k, then the integration-by-parts
    series -Σ_r (-1)^r m!/(m+1+r)! Ē_{m+1+r,χ̄}(0) g^(r)(T).
    """
    if exponent.real >= 0:
        raise RouteDomainError(f"tail integral needs Re(exponent) < 0, got {exponent}")
    period = 2 * chi.modulus
    end = (math.ceil(start / period) + TAIL_PERIODS) * period
    kernel = char_periodic_kernel(euler_spec(m, conjugate(chi)))

    def integrand(t: NDArray[np.float64]) -> NDArray[Any]:
        return kernel(t) * np.power(t + a, exponent)

    spec = QuadratureSpec.with_breakpoints(
        start, float(end), range(math.floor(start) + 1, end)
    )
    result = quadrature(integrand, spec)

    values = _boundary(chi, m + TAIL_IBP_TERMS)
    tail = 0j
    for r in range(TAIL_IBP_TERMS):
        weight = math.factorial(m) / math.factorial(m + 1 + r)
        derivative = falling_factorial(exponent, r) * (end + a) ** (exponent - r)
        tail -= (-1) ** r * weight * values[m + 1 + r] * derivative
    logger.debug(
        "tail integral m=%d from %s: %d panels to T=%d, error %.2e",
        m,
        start,
        result.panels,
        end,
        result.error,
    )
    return complex(result.value) + tail


def _series_route(s: complex, a: float, chi: DirichletCharacter) -> complex:
    if s.real <= 0:
        raise RouteDomainError(f"series route needs Re(s) > 0, got {s}")
    period = 2 * chi.modulus
    end = period * SERIES_BLOCKS
    n = np.arange(1, end + 1)
    head = complex(np.sum(signed_values(chi)[n % period] * np.power(n + a, -s)))

    sigma = -s
    values = _boundary(chi, SERIES_TAIL_TERMS)
    correction = sum(
        (
            (-1) ** j * falling_factorial(sigma, j) / math.factorial(j)
            * values[j] * (end + a) ** (sigma - j)
            for j in range(SERIES_TAIL_TERMS + 1)
        ),
        start=0j,
    )
    return head - 0.5 * chi.sign * correction


def _hurwitz_route(s: complex, a: float, chi: DirichletCharacter) -> complex:
    period = 2 * chi.modulus
    c = signed_values(chi)
    if s == 1:
        # the zeta poles cancel since Σ c_j = 0
        return complex(-sum(c[j] * digamma((a + j) / period) for j in range(1, period)) / period)
    total = sum(
        (c[j] * hurwitz_zeta(s, (a + j) / period) for j in range(1, period) if c[j] != 0),
        start=0j,
    )
    return complex(period ** (-s) * total)


def _integral_route(s: complex, a: float, chi: DirichletCharacter, order: int) -> complex:
    period = 2 * chi.modulus
    if a == 0:
        c = signed_values(chi)
        head = sum((c[n % period] * n ** (-s) for n in range(1, period + 1)), start=0j)
        return complex(head) + _integral_route(s, float(period), chi, order)
    if a < 0:
        raise RouteDomainError(f"integral route needs a >= 0, got {a}")

    sigma = -s
    values = _boundary(chi, order)
    boundary = sum(
        (
            (-1) ** j * falling_factorial(sigma, j) / math.factorial(j)
            * values[j] * a ** (sigma - j)
            for j in range(order + 1)
        ),
        start=0j,
    )
    twice = -chi.sign * boundary
    weight = falling_factorial(sigma, order + 1)
    if weight != 0:
        integral = tail_integral(chi, order, sigma - order - 1, a, 0.0)
        twice -= chi.sign * (-1) ** order * weight / math.factorial(order) * integral
    return twice / 2


def ell(q: LQuery) -> complex:
    """ℓ(s, a, χ) by the query's route."""
    s = complex(q.s)
    if q.method == ROUTE_SERIES:
        value = _series_route(s, q.a, q.character)
    elif q.method == ROUTE_HURWITZ:
        value = _hurwitz_route(s, q.a, q.character)
    else:
        value = _integral_route(s, q.a, q.character, q.truncation)
    logger.debug("ell(%s, %s, %s) by %s = %s", s, q.a, q.character.label, q.method, value)
    return ensure_finite(value)


def ell_value(
    s: complex, a: float, chi: DirichletCharacter, method: str = ROUTE_SERIES
) -> complex:
    return ell(LQuery(s=s, a=a, character=chi, method=method))


def ell_partial_sum(x: float, s: complex, a: float, chi: DirichletCharacter) -> complex:
    """Literal ℓ_s(x, a, χ) = Σ_{1<=n<=x} (-1)^n χ(n) (n+a)^s."""
    top = math.floor(x)
    if top < 1:
        return 0j
    n = np.arange(1, top + 1)
    c = signed_values(chi)[n % (2 * chi.modulus)]
    return complex(np.sum(c * np.power(n + a, complex(s))))


def ell_partial(
    x: float, s: complex, a: float, chi: DirichletCharacter, l: int | None = None  # noqa: E741
) -> complex:
    """ℓ_s(x, a, χ) through its integral representation.

    2ℓ_s(x) = χ(-1) Σ_{j<=l} (-1)^j (s)_j/j! Ē_{j,χ̄}(x)(x+a)^{s-j} + 2ℓ(-s, a)
              + χ(-1) (-1)^l (s)_{l+1}/l! ∫_x^∞ Ē_{l,χ̄}(t)(t+a)^{s-l-1} dt
    """
    check_character(chi)
    s = complex(s)
    order = auto_order(-s) if l is None else l
    if order <= s.real:
        raise RouteDomainError(f"order {order} must exceed Re(s) = {s.real}")
    if x + a <= 0:
        raise RouteDomainError(f"x + a must be > 0, got {x + a}")

    chi_bar = conjugate(chi)
    point = Fraction(x)
    boundary = 0j
    for j in range(order + 1):
        value = complex(char_periodic_eval(euler_spec(j, chi_bar), point))
        boundary += (
            (-1) ** j * falling_factorial(s, j) / math.factorial(j) * value * (x + a) ** (s - j)
        )
    twice = chi.sign * boundary
    twice += 2 * ell(LQuery(s=-s, a=a, character=chi, method=ROUTE_INTEGRAL))
    weight = falling_factorial(s, order + 1)
    if weight != 0:
        integral = tail_integral(chi, order, s - order - 1, a, float(x))
        twice += chi.sign * (-1) ** order * weight / math.factorial(order) * integral
    return twice / 2


def ell_special_negint(p: int, a: Fraction | float, chi: DirichletCharacter) -> Fraction | complex:
    """ℓ(1-p, a, χ) = E_{p-1,χ̄}(a)/2, exact for real χ and rational a."""
    if p < 1:
        raise LFunctionError(f"p must be >= 1, got {p}")
    point = Fraction(a) if chi.is_real else a
    value = char_euler_poly(p - 1, chi, point)
    return value / 2  # type: ignore[no-any-return]


def ell_zero(chi: DirichletCharacter) -> Fraction | complex:
    """ℓ(0, χ) = Ē_{0,χ̄}(0)/2."""
    return boundary_values(chi, 0)[0] / 2


def _log_gamma_sum(a: float, chi: DirichletCharacter) -> complex:
    period = 2 * chi.modulus
    c = signed_values(chi)
    return complex(
        sum(c[n] * log_gamma((n + a) / period) for n in range(1, period) if c[n] != 0)
    )


def _real_if(chi: DirichletCharacter, value: complex) -> complex | float:
    return value.real if chi.is_real else value


def ell_prime_zero(chi: DirichletCharacter) -> complex | float:
    """ℓ'(0, χ) = -ℓ(0, χ) log 2k + Σ c_n log Γ(n/2k)."""
    check_character(chi)
    value = -complex(ell_zero(chi)) * math.log(2 * chi.modulus) + _log_gamma_sum(0.0, chi)
    return _real_if(chi, value)


def ell_prime_zero_integral(chi: DirichletCharacter) -> complex | float:
    """ℓ'(0, χ) by its integral form.

    2ℓ'(0, χ) = -χ(-1) Ē_{1,χ̄}(1) + χ(-1) ∫_1^∞ Ē_{1,χ̄}(t) t^{-2} dt.
    """
    check_character(chi)
    at_one = complex(char_periodic_eval(euler_spec(1, conjugate(chi)), 1))
    integral = tail_integral(chi, 1, -2 + 0j, 0.0, 1.0)
    return _real_if(chi, chi.sign * (integral - at_one) / 2)


@dataclass
class DerivativeZeroReport:
    """ℓ'(0, a, χ) by the log-gamma sum and by the integral route."""

    log_gamma_route: complex | float
    integral_route: complex | float

    @property
    def value(self) -> complex | float:
        return self.log_gamma_route

    @property
    def defect(self) -> complex | float:
        return self.log_gamma_route - self.integral_route


def ell_derivative0(a: float, chi: DirichletCharacter) -> DerivativeZeroReport:
    """ℓ'(0, a, χ).

    2ℓ'(0, a) = -Ē_{0,χ̄}(0) log 2k + 2 Σ c_n log Γ((n+a)/2k), checked against
    2ℓ'(0, a) = -Ē_{0,χ̄}(0) log a - Ē_{1,χ̄}(0)/a
                + χ(-1) ∫_0^∞ Ē_{1,χ̄}(t)(t+a)^{-2} dt.
    """
    check_character(chi)
    if a <= 0:
        raise RouteDomainError(f"ell_derivative0 needs a > 0, got {a}")
    e0, e1 = _boundary(chi, 1)
    primary = (-e0 * math.log(2 * chi.modulus) + 2 * _log_gamma_sum(a, chi)) / 2
    integral = tail_integral(chi, 1, -2 + 0j, a, 0.0)
    check = (-e0 * math.log(a) - e1 / a + chi.sign * integral) / 2
    return DerivativeZeroReport(_real_if(chi, primary), _real_if(chi, check))


_COT_EXPLICIT: dict[int, Callable[[float], float]] = {
    0: lambda x: math.cos(x) / math.sin(x),
    1: lambda x: -1.0 / math.sin(x) ** 2,
    2: lambda x: 2.0 * math.cos(x) / math.sin(x) ** 3,
    3: lambda x: -2.0 * (1.0 + 2.0 * math.cos(x) ** 2) / math.sin(x) ** 4,
}


def cot_derivative(m: int, x: float) -> float:
    """m-th derivative of cot at x; P_{m+1}(c) = -(1 + c^2) P_m'(c) past the explicit forms."""
    explicit = _COT_EXPLICIT.get(m)
    if explicit is not None:
        return explicit(x)
    poly = np.polynomial.Polynomial([0.0, 1.0])
    lift = np.polynomial.Polynomial([-1.0, 0.0, -1.0])
    for _ in range(m):
        poly = lift * poly.deriv()
    return float(poly(math.cos(x) / math.sin(x)))


def ell_cot(m: int, chi: DirichletCharacter) -> complex | float:
    """ℓ(m, χ) = ((-1)^{m-1} (π/2k)^m / (2 (m-1)!)) Σ c_n cot^{(m-1)}(πn/2k).

    Needs χ(-1)(-1)^m = 1.
    """
    check_character(chi)
    if m < 1:
        raise LFunctionError(f"m must be >= 1, got {m}")
    if chi.sign * (-1) ** m != 1:
        raise ParityConditionError(
            f"ell_cot({m}) needs χ(-1)(-1)^m = 1; character {chi.label} is {chi.parity}"
        )
    period = 2 * chi.modulus
    c = signed_values(chi)
    total = sum(
        (c[n] * cot_derivative(m - 1, math.pi * n / period) for n in range(1, period) if c[n]),
        start=0j,
    )
    scale = (-1) ** (m - 1) * (math.pi / period) ** m / math.factorial(m - 1)
    return _real_if(chi, complex(scale * total / 2))


def ell_cot_reflection(a: float, chi: DirichletCharacter) -> complex | float:
    """(π/2k) Σ c_n cot(π(n+a)/2k), the value of ℓ(1, a) - χ(-1) ℓ(1, -a)."""
    check_character(chi)
    period = 2 * chi.modulus
    c = signed_values(chi)
    total = sum(
        (c[n] / math.tan(math.pi * (n + a) / period) for n in range(1, period) if c[n]),
        start=0j,
    )
    return _real_if(chi, complex(math.pi / period * total))
