"""Scalar kernels: exact rationals, Hurwitz zeta, log-gamma, polygamma, quadrature.

Everything here is a pure function of its arguments. Exact values are
``fractions.Fraction``; floating values are Python ``float``/``complex``
and numpy arrays where a kernel is evaluated on many points at once.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, TypeVar

import numpy as np
from numpy.typing import NDArray

from boolechar.shared.constants import (
    DEFAULT_QUAD_ABS_TOL,
    DEFAULT_QUAD_REL_TOL,
    DEFAULT_ZETA_TOL,
    QUAD_MAX_DEPTH,
    QUAD_NODES,
)

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = TypeVar("Scalar", int, float, complex, Fraction)

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(QUAD_NODES)

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_ASYMPTOTIC_TERMS = 10
_LOG_GAMMA_SHIFT = 10.0
_POLYGAMMA_SHIFT = 15.0
_ZETA_MAX_CORRECTIONS = 40
_ZETA_MAX_RESTARTS = 8

# Grow-only cache of B_0, B_1, ... (B_1 = -1/2 convention).
_BERNOULLI: list[Fraction] = [Fraction(1)]


class NumericError(Exception):
    """Base class for scalar-kernel failures."""


class DomainError(NumericError):
    """Raised when an argument lies outside the kernel's domain."""


class PoleError(NumericError):
    """Raised when a kernel is evaluated at a pole."""


class ConvergenceError(NumericError):
    """Raised when an adaptive scheme exceeds its refinement budget."""


class NonFiniteError(NumericError):
    """Raised when a floating result has a NaN or infinite component."""


def ensure_finite(value: complex) -> complex:
    """Return ``value`` unchanged, or raise if either component is not finite."""
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteError(f"Non-finite value encountered: {value!r}")
    return value


def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """Return B_0..B_n exactly, with B_1 = -1/2.

    Uses sum_{j<=m} C(m+1, j) B_j = 0 and extends a module cache.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = sum(
            (math.comb(m + 1, j) * b for j, b in enumerate(_BERNOULLI)),
            start=Fraction(0),
        )
        _BERNOULLI.append(-acc / (m + 1))
    return tuple(_BERNOULLI[: n + 1])


def falling_factorial(s: Scalar, j: int) -> Scalar:
    """Return (s)_j = s(s-1)...(s-j+1), with (s)_0 = 1."""
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    result: Any = 1
    for i in range(j):
        result = result * (s - i)
    return result  # type: ignore[no-any-return]


def hurwitz_zeta(s: complex, a: float, tol: float = DEFAULT_ZETA_TOL) -> complex:
    """Hurwitz zeta ζ(s, a) for complex s ≠ 1 and real a > 0.

    Euler-MacLaurin after shifting the argument by N terms: the direct
    sum, the tail integral, the half-term and Bernoulli corrections
    until a correction drops below ``tol`` in absolute value, so the
    result carries an absolute, not a relative, error of about ``tol``.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    if a <= 0:
        raise DomainError(f"hurwitz_zeta requires a > 0, got {a}")
    if tol <= 0:
        raise DomainError(f"tol must be > 0, got {tol}")

    bern = bernoulli_numbers(2 * _ZETA_MAX_CORRECTIONS)
    n_terms = max(10, int(abs(s)) + 10)
    for _ in range(_ZETA_MAX_RESTARTS):
        shifted = n_terms + a
        head = np.power(np.arange(n_terms, dtype=float) + a, -s).sum()
        total = complex(head) + shifted ** (1 - s) / (s - 1) + 0.5 * shifted ** (-s)

        rising = s  # s(s+1)...(s+2j-2)
        power = shifted ** (-s - 1)
        factorial = 2.0
        for j in range(1, _ZETA_MAX_CORRECTIONS + 1):
            term = float(bern[2 * j]) / factorial * rising * power
            total += term
            if abs(term) <= tol:
                return ensure_finite(total)
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            power /= shifted * shifted
            factorial *= (2 * j + 1) * (2 * j + 2)
        n_terms *= 2
        logger.debug("hurwitz_zeta(%s, %s): raising shift to %d", s, a, n_terms)

    raise ConvergenceError(f"hurwitz_zeta({s}, {a}) did not reach tol={tol}")


def log_gamma(x: float) -> float:
    """Natural log of Γ(x) for real x > 0."""
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    shift = 0.0
    while x < _LOG_GAMMA_SHIFT:
        shift += math.log(x)
        x += 1.0

    bern = bernoulli_numbers(2 * _ASYMPTOTIC_TERMS)
    inv = 1.0 / x
    inv_sq = inv * inv
    series = 0.0
    power = inv
    for j in range(1, _ASYMPTOTIC_TERMS + 1):
        series += float(bern[2 * j]) / (2 * j * (2 * j - 1)) * power
        power *= inv_sq
    return (x - 0.5) * math.log(x) - x + _LOG_SQRT_2PI + series - shift


def polygamma(m: int, x: float) -> float:
    """m-th derivative of the digamma function at real x > 0 (m = 0 gives ψ)."""
    if m < 0:
        raise DomainError(f"polygamma order must be >= 0, got {m}")
    if x <= 0:
        raise DomainError(f"polygamma requires x > 0, got {x}")

    sign = -1.0 if m % 2 else 1.0
    m_fact = math.factorial(m)
    shift = 0.0
    threshold = _POLYGAMMA_SHIFT + m
    while x < threshold:
        shift += x ** (-m - 1)
        x += 1.0

    bern = bernoulli_numbers(2 * _ASYMPTOTIC_TERMS)
    if m == 0:
        value = math.log(x) - 0.5 / x
        for j in range(1, _ASYMPTOTIC_TERMS + 1):
            value -= float(bern[2 * j]) / (2 * j * x ** (2 * j))
    else:
        value = math.factorial(m - 1) / x**m + m_fact / (2.0 * x ** (m + 1))
        for j in range(1, _ASYMPTOTIC_TERMS + 1):
            coeff = math.factorial(2 * j + m - 1) / math.factorial(2 * j)
            value += float(bern[2 * j]) * coeff / x ** (2 * j + m)
        value *= -sign
    return value - sign * m_fact * shift


def digamma(x: float) -> float:
    return polygamma(0, x)


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration bounds and tolerances; breakpoints are strictly interior."""

    lower: float
    upper: float
    breakpoints: tuple[float, ...] = ()
    rel_tol: float = DEFAULT_QUAD_REL_TOL
    abs_tol: float = DEFAULT_QUAD_ABS_TOL

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ValueError(f"lower must be < upper, got [{self.lower}, {self.upper}]")
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be > 0")
        previous = self.lower
        for point in self.breakpoints:
            if not previous < point < self.upper:
                raise ValueError(
                    f"breakpoints must be sorted and strictly inside "
                    f"({self.lower}, {self.upper}), got {self.breakpoints}"
                )
            previous = point

    @classmethod
    def with_breakpoints(
        cls,
        lower: float,
        upper: float,
        points: Any,
        *,
        rel_tol: float = DEFAULT_QUAD_REL_TOL,
        abs_tol: float = DEFAULT_QUAD_ABS_TOL,
    ) -> QuadratureSpec:
        """Build a spec keeping only the distinct points strictly inside (lower, upper)."""
        interior = sorted({float(p) for p in points if lower < p < upper})
        return cls(lower, upper, tuple(interior), rel_tol, abs_tol)

    @property
    def edges(self) -> NDArray[np.float64]:
        return np.array([self.lower, *self.breakpoints, self.upper], dtype=float)


@dataclass
class QuadratureResult:
    """Integral value with its refinement error estimate."""

    value: complex | float
    error: float
    panels: int
    depth: int = 0
    notes: list[str] = field(default_factory=list)


def _evaluate(f: Callable[[Any], Any], x: NDArray[np.float64]) -> NDArray[Any]:
    """Evaluate f on an array, falling back to pointwise calls for scalar callbacks."""
    try:
        y = np.asarray(f(x))
        if y.shape == x.shape:
            return y
        logger.debug(
            "Integrand returned shape %s for %d points; calling pointwise", y.shape, x.size
        )
    except (TypeError, ValueError) as exc:
        logger.debug("Vectorized integrand call failed (%s); calling pointwise", exc)
    return np.array([f(float(t)) for t in x])


def _gauss_panels(
    f: Callable[[Any], Any], lo: NDArray[np.float64], hi: NDArray[np.float64]
) -> tuple[NDArray[Any], NDArray[Any]]:
    """Return (single-panel rule, two-half-panel rule) for every panel at once."""
    mid = 0.5 * (lo + hi)
    a = np.concatenate([lo, lo, mid])
    b = np.concatenate([hi, mid, hi])
    half = 0.5 * (b - a)
    x = (0.5 * (a + b))[:, None] + half[:, None] * _GL_NODES[None, :]
    y = _evaluate(f, x.ravel()).reshape(x.shape)
    values = half * (y @ _GL_WEIGHTS)
    count = lo.shape[0]
    return values[:count], values[count : 2 * count] + values[2 * count :]


def quadrature(
    f: Callable[[Any], Any],
    spec: QuadratureSpec,
    *,
    max_depth: int = QUAD_MAX_DEPTH,
) -> QuadratureResult:
    """Adaptive 16-point Gauss-Legendre over the panels between breakpoints.

    A panel is accepted when its single rule and its two-half rule agree
    within max(abs_tol * width / span, rel_tol * |value|); otherwise it is
    bisected. Panels never straddle a breakpoint.
    """
    edges = spec.edges
    span = spec.upper - spec.lower
    lo, hi = edges[:-1], edges[1:]

    total = 0j
    error = 0.0
    accepted = 0
    depth = 0
    warned = False
    while lo.size:
        if depth > max_depth:
            raise ConvergenceError(
                f"quadrature on [{spec.lower}, {spec.upper}] exceeded depth {max_depth} "
                f"with {lo.size} unresolved panels"
            )
        if depth >= max_depth // 2 and not warned:
            logger.warning(
                "quadrature on [%s, %s] reached depth %d (%d open panels)",
                spec.lower,
                spec.upper,
                depth,
                lo.size,
            )
            warned = True
        whole, refined = _gauss_panels(f, lo, hi)
        diff = np.abs(whole - refined)
        allowed = np.maximum(spec.abs_tol * (hi - lo) / span, spec.rel_tol * np.abs(refined))
        done = diff <= allowed
        total += complex(refined[done].sum())
        error += float(diff[done].sum())
        accepted += int(done.sum())
        mid = 0.5 * (lo + hi)
        open_lo, open_hi, open_mid = lo[~done], hi[~done], mid[~done]
        lo = np.concatenate([open_lo, open_mid])
        hi = np.concatenate([open_mid, open_hi])
        depth += 1

    value: complex | float = total if total.imag != 0 else total.real
    logger.debug(
        "quadrature on [%s, %s]: %d panels, depth %d", spec.lower, spec.upper, accepted, depth
    )
    return QuadratureResult(value=value, error=error, panels=accepted, depth=depth)


def integrate_piecewise(f: Callable[[Any], Any], spec: QuadratureSpec) -> complex | float:
    """Integral of a piecewise-smooth f; see :func:`quadrature`."""
    return quadrature(f, spec).value
