"""Summation-formula engines: classical Boole, character Euler-MacLaurin, character Boole.

Each engine evaluates both sides of its formula for a caller-supplied
smooth function and returns the defect. The remainder integral is taken
panelwise between consecutive integers, where the periodic kernels are
polynomial.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Callable

import numpy as np

from boolechar.arith.characters import DirichletCharacter, conjugate
from boolechar.arith.eulerfun import (
    SIDE_LEFT,
    bernoulli_spec,
    char_periodic_eval,
    char_periodic_kernel,
    euler_at_zero,
    euler_spec,
    periodic_kernel,
)
from boolechar.arith.numeric import QuadratureSpec, falling_factorial, quadrature
from boolechar.shared.constants import (
    FAMILY_EXP,
    FAMILY_LOG,
    FAMILY_POWER,
    FAMILY_RECIPROCAL,
    KIND_EULER,
)

logger = logging.getLogger(__name__)

Derivative = Callable[[Any], Any]

_PROBE_STEP = 1e-5
_PROBE_TOL = 1e-5


class SummationError(Exception):
    """Base class for summation-engine failures."""


class OrderError(SummationError):
    """Raised when the requested order needs derivatives the function lacks."""


class CharacterHypothesisError(SummationError):
    """Raised when the character is not primitive or the modulus has the wrong parity."""


class DerivativeMismatchError(SummationError):
    """Raised when a supplied derivative disagrees with a finite difference of its predecessor."""


def _at(fn: Derivative, x: float) -> float:
    return float(np.asarray(fn(x)))


@dataclass(frozen=True)
class SmoothFunction:
    """f and its derivatives f, f', ..., f^(L) as vectorizable callbacks."""

    derivatives: tuple[Derivative, ...]
    name: str = "f"
    probe: float = 0.5

    def __post_init__(self) -> None:
        if not self.derivatives:
            raise SummationError("a smooth function needs at least f itself")
        h = _PROBE_STEP
        for j in range(1, len(self.derivatives)):
            prev = self.derivatives[j - 1]
            estimate = (_at(prev, self.probe + h) - _at(prev, self.probe - h)) / (2 * h)
            exact = _at(self.derivatives[j], self.probe)
            if abs(estimate - exact) > _PROBE_TOL * max(1.0, abs(exact)):
                raise DerivativeMismatchError(
                    f"{self.name}: derivative {j} at {self.probe} is {exact}, "
                    f"finite difference gives {estimate}"
                )

    @property
    def max_order(self) -> int:
        return len(self.derivatives) - 1

    def derivative(self, j: int) -> Derivative:
        if not 0 <= j <= self.max_order:
            raise OrderError(f"{self.name}: derivative {j} not available (max {self.max_order})")
        return self.derivatives[j]

    def require(self, order: int) -> None:
        if order > self.max_order:
            raise OrderError(
                f"{self.name}: order {order} needs derivatives up to {order}, "
                f"only {self.max_order} supplied"
            )

    def rescaled(self, factor: float) -> SmoothFunction:
        """x -> f(factor * x) with its chain-rule derivatives."""

        def scaled(j: int, x: Any) -> Any:
            return factor**j * self.derivatives[j](factor * np.asarray(x, dtype=float))

        return SmoothFunction(
            tuple(partial(scaled, j) for j in range(len(self.derivatives))),
            name=f"{self.name}({factor}x)",
            probe=self.probe / factor,
        )


def _exp_derivative(c: float, j: int, x: Any) -> Any:
    return c**j * np.exp(c * np.asarray(x, dtype=float))


def _power_derivative(d: int, j: int, x: Any) -> Any:
    x = np.asarray(x, dtype=float)
    if j > d:
        return np.zeros_like(x)
    return falling_factorial(d, j) * x ** (d - j)


def _reciprocal_derivative(shift: float, j: int, x: Any) -> Any:
    return (-1) ** j * math.factorial(j) / (np.asarray(x, dtype=float) + shift) ** (j + 1)


def _log_derivative(shift: float, j: int, x: Any) -> Any:
    x = np.asarray(x, dtype=float) + shift
    if j == 0:
        return np.log(x)
    return (-1) ** (j - 1) * math.factorial(j - 1) / x**j


def exp_family(c: float = 0.1, order: int = 8) -> SmoothFunction:
    """e^{cx}."""
    return SmoothFunction(
        tuple(partial(_exp_derivative, c, j) for j in range(order + 1)),
        name=f"{FAMILY_EXP}({c})",
    )


def power_family(d: int, order: int = 8) -> SmoothFunction:
    """x^d for an integer d >= 0."""
    if d < 0:
        raise SummationError(f"power family needs d >= 0, got {d}")
    return SmoothFunction(
        tuple(partial(_power_derivative, d, j) for j in range(order + 1)),
        name=f"{FAMILY_POWER}({d})",
    )


def reciprocal_family(shift: float = 1.0, order: int = 8) -> SmoothFunction:
    """1/(x + shift), smooth for x > -shift."""
    return SmoothFunction(
        tuple(partial(_reciprocal_derivative, shift, j) for j in range(order + 1)),
        name=f"{FAMILY_RECIPROCAL}({shift})",
        probe=1.0 - shift + 0.5 if shift < 1 else 0.5,
    )


def log_family(shift: float = 1.0, order: int = 8) -> SmoothFunction:
    """log(x + shift), smooth for x > -shift."""
    return SmoothFunction(
        tuple(partial(_log_derivative, shift, j) for j in range(order + 1)),
        name=f"{FAMILY_LOG}({shift})",
        probe=1.0 - shift + 0.5 if shift < 1 else 0.5,
    )


_FAMILIES: dict[str, Callable[..., SmoothFunction]] = {
    FAMILY_EXP: exp_family,
    FAMILY_POWER: power_family,
    FAMILY_RECIPROCAL: reciprocal_family,
    FAMILY_LOG: log_family,
}


def make_family(family: str, parameter: float, order: int = 8) -> SmoothFunction:
    """Build a named family; the parameter is c, d or the shift."""
    builder = _FAMILIES.get(family)
    if builder is None:
        raise SummationError(f"Unknown family '{family}'. Must be one of: {sorted(_FAMILIES)}")
    if family == FAMILY_POWER:
        return builder(int(parameter), order)
    return builder(parameter, order)


@dataclass
class SummationReport:
    """Both sides of a summation formula and their defect."""

    lhs: complex | float
    rhs_boundary: complex | float
    rhs_integral: complex | float
    order: int
    quad_error: float
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def rhs(self) -> complex | float:
        return self.rhs_boundary + self.rhs_integral

    @property
    def defect(self) -> complex | float:
        return self.lhs - self.rhs

    def to_dict(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhsBoundary": self.rhs_boundary,
            "rhsIntegral": self.rhs_integral,
            "defect": self.defect,
            "order": self.order,
            "quadError": self.quad_error,
            **self.notes,
        }


def _tidy(value: complex, real: bool) -> complex | float:
    return value.real if real else value


def _as_number(value: Fraction | complex) -> complex:
    return complex(float(value)) if isinstance(value, Fraction) else complex(value)


def _check_primitive(chi: DirichletCharacter, *, odd_modulus: bool) -> None:
    if chi.modulus < 2 or not chi.is_primitive:
        raise CharacterHypothesisError(f"character {chi.label} must be primitive with k > 1")
    if odd_modulus and chi.modulus % 2 == 0:
        raise CharacterHypothesisError(
            f"character {chi.label} must have an odd modulus, got {chi.modulus}"
        )


def _check_range(alpha: Any, beta: Any) -> tuple[Fraction, Fraction]:
    a, b = Fraction(alpha), Fraction(beta)
    if not a < b:
        raise SummationError(f"alpha must be < beta, got [{alpha}, {beta}]")
    return a, b


def _integer_spec(a: Fraction, b: Fraction) -> QuadratureSpec:
    return QuadratureSpec.with_breakpoints(
        float(a), float(b), range(math.floor(a) + 1, math.ceil(b))
    )


def _interior(a: Fraction, b: Fraction) -> range:
    """Integers strictly inside (a, b)."""
    return range(math.floor(a) + 1, math.ceil(b))


def boole_sum(f: SmoothFunction, alpha: int, beta: int, l: int) -> SummationReport:  # noqa: E741
    """Classical Boole formula with the Ē_{l-1}(-x) remainder kernel.

    2 Σ_{α<=n<β} (-1)^n f(n) = Σ_{j<l} E_j(0)/j! ((-1)^{β-1} f^(j)(β) + (-1)^α f^(j)(α))
                               + 1/(l-1)! ∫ f^(l)(x) Ē_{l-1}(-x) dx
    """
    if l < 1:
        raise OrderError(f"Boole order must be >= 1, got {l}")
    f.require(l)
    if not alpha < beta:
        raise SummationError(f"alpha must be < beta, got [{alpha}, {beta}]")

    lhs = 2.0 * sum((-1) ** n * _at(f.derivative(0), n) for n in range(alpha, beta))
    sign_beta = (-1) ** (beta - 1)
    sign_alpha = (-1) ** alpha
    boundary = 0.0
    for j in range(l):
        weight = float(euler_at_zero(j)) / math.factorial(j)
        fj = f.derivative(j)
        boundary += weight * (sign_beta * _at(fj, beta) + sign_alpha * _at(fj, alpha))

    kernel = periodic_kernel(KIND_EULER, l - 1)
    fl = f.derivative(l)
    result = quadrature(
        lambda x: fl(x) * kernel(-x),
        QuadratureSpec.with_breakpoints(float(alpha), float(beta), range(alpha + 1, beta)),
    )
    integral = complex(result.value).real / math.factorial(l - 1)
    logger.debug("boole_sum %s on [%d, %d], l=%d: %d panels", f.name, alpha, beta, l, result.panels)
    return SummationReport(lhs, boundary, integral, l, result.error)


def char_euler_maclaurin(
    chi: DirichletCharacter, f: SmoothFunction, alpha: Any, beta: Any, l: int  # noqa: E741
) -> SummationReport:
    """Character Euler-MacLaurin formula with half weight at integer endpoints.

    Σ'_{α<=n<=β} χ(n) f(n) = Σ_{j<=l} (-1)^{j+1} χ(-1)/(j+1)! [B̄_{j+1,χ̄} f^(j)]_α^β
                             + (-1)^l χ(-1)/(l+1)! ∫ B̄_{l+1,χ̄}(x) f^(l+1)(x) dx
    """
    _check_primitive(chi, odd_modulus=False)
    if l < 0:
        raise OrderError(f"order must be >= 0, got {l}")
    f.require(l + 1)
    a, b = _check_range(alpha, beta)
    real = chi.is_real
    chi_bar = conjugate(chi)
    sign = chi.sign

    lhs = 0j
    f0 = f.derivative(0)
    for n in range(math.ceil(a), math.floor(b) + 1):
        weight = 0.5 if n in (a, b) else 1.0
        lhs += weight * _as_number(chi.value(n)) * _at(f0, n)

    boundary = 0j
    for j in range(l + 1):
        spec = bernoulli_spec(j + 1, chi_bar)
        fj = f.derivative(j)
        upper = _as_number(char_periodic_eval(spec, b)) * _at(fj, float(b))
        lower = _as_number(char_periodic_eval(spec, a)) * _at(fj, float(a))
        boundary += (-1) ** (j + 1) * sign / math.factorial(j + 1) * (upper - lower)

    kernel = char_periodic_kernel(bernoulli_spec(l + 1, chi_bar))
    fl = f.derivative(l + 1)
    result = quadrature(lambda x: kernel(x) * fl(x), _integer_spec(a, b))
    integral = (-1) ** l * sign / math.factorial(l + 1) * complex(result.value)
    logger.debug(
        "char_euler_maclaurin %s mod %d, l=%d: %d panels", f.name, chi.modulus, l, result.panels
    )
    return SummationReport(
        _tidy(lhs, real), _tidy(boundary, real), _tidy(integral, real), l, result.error
    )


def char_boole_sum(
    chi: DirichletCharacter, f: SmoothFunction, alpha: Any, beta: Any, l: int  # noqa: E741
) -> SummationReport:
    """Character Boole formula for odd k.

    2 Σ_{α<n<β} (-1)^n χ(n) f(n) = χ(-1) Σ_{j<=l} (-1)^j/j! [Ē_{j,χ̄} f^(j)]_α^β
                                   - χ(-1) (-1)^l/l! ∫ Ē_{l,χ̄}(t) f^(l+1)(t) dt

    Ē_{j,χ̄} at β is its left limit, so an integer β stays outside the sum.
    """
    _check_primitive(chi, odd_modulus=True)
    if l < 0:
        raise OrderError(f"order must be >= 0, got {l}")
    f.require(l + 1)
    a, b = _check_range(alpha, beta)
    real = chi.is_real
    chi_bar = conjugate(chi)
    sign = chi.sign

    f0 = f.derivative(0)
    lhs = 2 * sum(
        ((-1) ** n * _as_number(chi.value(n)) * _at(f0, n) for n in _interior(a, b)),
        start=0j,
    )

    boundary = 0j
    for j in range(l + 1):
        spec = euler_spec(j, chi_bar)
        fj = f.derivative(j)
        upper = _as_number(char_periodic_eval(spec, b, SIDE_LEFT)) * _at(fj, float(b))
        lower = _as_number(char_periodic_eval(spec, a)) * _at(fj, float(a))
        boundary += sign * (-1) ** j / math.factorial(j) * (upper - lower)

    kernel = char_periodic_kernel(euler_spec(l, chi_bar))
    fl = f.derivative(l + 1)
    result = quadrature(lambda t: kernel(t) * fl(t), _integer_spec(a, b))
    integral = -sign * (-1) ** l / math.factorial(l) * complex(result.value)
    logger.debug("char_boole_sum %s mod %d, l=%d: %d panels", f.name, chi.modulus, l, result.panels)
    return SummationReport(
        _tidy(lhs, real),
        _tidy(boundary, real),
        _tidy(integral, real),
        l,
        result.error,
        notes={"sign": "as printed"},
    )


@dataclass
class SplitReport:
    """Alternating character sum against its even/all split."""

    alternating: complex | float
    split: complex | float

    @property
    def defect(self) -> complex | float:
        return self.alternating - self.split


def _endpoint_weight(chi: DirichletCharacter, f: SmoothFunction, x: Fraction) -> complex:
    if x.denominator != 1:
        return 0j
    return 0.5 * _as_number(chi.value(int(x))) * _at(f.derivative(0), float(x))


def alternating_split_defect(
    chi: DirichletCharacter, f: SmoothFunction, alpha: Any, beta: Any, l: int = 2  # noqa: E741
) -> SplitReport:
    """Compare the Boole engine with 2[2χ(2) Σ χ(n) f(2n) - Σ χ(n) f(n)].

    The right side comes from two Euler-MacLaurin runs.

    Endpoint half weights of the Euler-MacLaurin sums are removed so both
    sides run over the open interval.
    """
    a, b = _check_range(alpha, beta)
    alternating = char_boole_sum(chi, f, a, b, l).rhs

    g = f.rescaled(2.0)
    half_a, half_b = a / 2, b / 2
    evens = complex(char_euler_maclaurin(chi, g, half_a, half_b, l).rhs)
    evens -= _endpoint_weight(chi, g, half_a) + _endpoint_weight(chi, g, half_b)
    whole = complex(char_euler_maclaurin(chi, f, a, b, l).rhs)
    whole -= _endpoint_weight(chi, f, a) + _endpoint_weight(chi, f, b)

    split = 2 * (2 * _as_number(chi.value(2)) * evens - whole)
    return SplitReport(alternating, _tidy(split, chi.is_real))
