"""Bernoulli and Euler polynomials, their periodic extensions and character twists.

Exact values are Fractions. Characters with values in Q(i) also have an
exact GaussianRational path; otherwise the twisted functions are complex
doubles. Vectorized numpy kernels, built from exact polynomial pieces on
each unit interval, serve the quadrature paths.

Point convention: Ē_n is right-continuous at integers (Ē_0(m) = (-1)^m)
and B̄_1 vanishes at integers. ``side="left"`` and ``side="mid"`` give the
left limit and the average of both limits.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

import numpy as np
from numpy.typing import NDArray

from boolechar.arith.characters import DirichletCharacter, GaussianRational, conjugate
from boolechar.arith.numeric import bernoulli_numbers, hurwitz_zeta
from boolechar.shared.constants import KIND_BERNOULLI, KIND_EULER, VALID_KINDS

logger = logging.getLogger(__name__)

SIDE_RIGHT = "right"
SIDE_LEFT = "left"
SIDE_MID = "mid"

_VALID_SIDES = frozenset({SIDE_RIGHT, SIDE_LEFT, SIDE_MID})

Kernel = Callable[[NDArray[np.float64]], NDArray[Any]]


class EulerFunctionError(Exception):
    """Raised for invalid kinds, orders or evaluation points."""


class OddModulusError(EulerFunctionError):
    """Raised when a character Euler function is requested for an even modulus."""


def _check_kind(kind: str) -> None:
    if kind not in VALID_KINDS:
        raise EulerFunctionError(f"Unknown kind '{kind}'. Must be one of: {sorted(VALID_KINDS)}")


def _check_side(side: str) -> None:
    if side not in _VALID_SIDES:
        raise EulerFunctionError(f"Unknown side '{side}'. Must be one of: {sorted(_VALID_SIDES)}")


@dataclass(frozen=True)
class PolySpec:
    """Exact ascending coefficients of B_n(x) or E_n(x)."""

    kind: str
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        _check_kind(self.kind)
        if len(self.coeffs) != self.degree + 1:
            raise EulerFunctionError(
                f"{self.kind} polynomial of degree {self.degree} needs {self.degree + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )
        if self.coeffs[-1] != 1:
            raise EulerFunctionError("leading coefficient must be 1")

    def __call__(self, x: Any) -> Any:
        result: Any = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * x + c
        return result

    def derivative_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(i * c for i, c in enumerate(self.coeffs) if i)


@lru_cache(maxsize=None)
def poly_coeffs(kind: str, n: int) -> PolySpec:
    """Coefficients of B_n(x) or E_n(x).

    E_n(x) = 2/(n+1) * (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)).
    """
    _check_kind(kind)
    if n < 0:
        raise EulerFunctionError(f"degree must be >= 0, got {n}")
    bern = bernoulli_numbers(n + 1)
    if kind == KIND_BERNOULLI:
        coeffs = tuple(math.comb(n, i) * bern[n - i] for i in range(n + 1))
    else:
        scale = Fraction(2, n + 1)
        coeffs = tuple(
            scale * math.comb(n + 1, i) * bern[n + 1 - i] * (1 - 2 ** (n + 1 - i))
            for i in range(n + 1)
        )
    return PolySpec(kind=kind, degree=n, coeffs=coeffs)


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


def euler_at_zero(n: int) -> Fraction:
    """E_n(0)."""
    return poly_coeffs(KIND_EULER, n).coeffs[0]


def euler_number(n: int) -> Fraction:
    """E_n = 2^n E_n(1/2)."""
    return 2**n * poly_coeffs(KIND_EULER, n)(Fraction(1, 2))


def _split(x: Fraction, side: str) -> tuple[int, Fraction]:
    """Integer part and offset; the left side maps integers to (x-1, 1)."""
    floor = math.floor(x)
    offset = x - floor
    if side == SIDE_LEFT and offset == 0:
        return floor - 1, Fraction(1)
    return floor, offset


def periodic_eval(kind: str, n: int, x: Fraction | int, side: str = SIDE_RIGHT) -> Fraction:
    """B̄_n(x) or Ē_n(x) exactly.

    Ē_n(x + m) = (-1)^m E_n(x) on the base interval [0, 1); B̄_n is
    1-periodic with B̄_1 = 0 at integers.
    """
    _check_kind(kind)
    _check_side(side)
    x = Fraction(x)
    if kind == KIND_BERNOULLI and n < 1:
        raise EulerFunctionError("periodic Bernoulli functions need n >= 1")
    if side == SIDE_MID:
        # B̄_1 already takes the mean value at its jumps
        if x.denominator != 1 or kind == KIND_BERNOULLI:
            return periodic_eval(kind, n, x)
        return (periodic_eval(kind, n, x) + periodic_eval(kind, n, x, SIDE_LEFT)) / 2

    poly = poly_coeffs(kind, n)
    floor, offset = _split(x, side)
    if kind == KIND_BERNOULLI:
        if n == 1 and offset == 0:
            return Fraction(0)
        return poly(offset)  # type: ignore[no-any-return]
    value: Fraction = poly(offset)
    return -value if floor % 2 else value


@dataclass(frozen=True)
class CharPeriodicSpec:
    """B̄_{m,χ} or Ē_{m,χ}; the defining sums run over conj(χ)(j)."""

    kind: str
    order: int
    character: DirichletCharacter

    def __post_init__(self) -> None:
        _check_kind(self.kind)
        if self.order < 0:
            raise EulerFunctionError(f"order must be >= 0, got {self.order}")
        if self.kind == KIND_BERNOULLI and self.order < 1:
            raise EulerFunctionError("character Bernoulli functions need order >= 1")
        if self.kind == KIND_EULER and self.character.modulus % 2 == 0:
            raise OddModulusError(
                f"character Euler functions need an odd modulus, got {self.character.modulus}"
            )

    @property
    def modulus(self) -> int:
        return self.character.modulus

    @property
    def period(self) -> int:
        return 2 * self.modulus if self.kind == KIND_EULER else self.modulus

    def derivative(self) -> CharPeriodicSpec:
        return CharPeriodicSpec(self.kind, self.order - 1, self.character)


def euler_spec(m: int, chi: DirichletCharacter) -> CharPeriodicSpec:
    return CharPeriodicSpec(KIND_EULER, m, chi)


def bernoulli_spec(m: int, chi: DirichletCharacter) -> CharPeriodicSpec:
    return CharPeriodicSpec(KIND_BERNOULLI, m, chi)


def _weights(spec: CharPeriodicSpec) -> list[Any]:
    """Summation weights: conj(χ)(j), times (-1)^j for the Euler kind."""
    chi = spec.character
    out: list[Any] = []
    for j in range(spec.modulus):
        value = chi(j).conjugate()
        w: Any = value.to_rational() if chi.is_real else value.to_complex()
        if spec.kind == KIND_EULER and j % 2:
            w = -w
        out.append(w)
    return out


@lru_cache(maxsize=1 << 16)
def _char_periodic_cached(spec: CharPeriodicSpec, x: Fraction, side: str) -> Fraction | complex:
    k = spec.modulus
    m = spec.order
    scale = k ** (m - 1) if spec.kind == KIND_BERNOULLI else k**m
    total: Any = 0
    for j, w in enumerate(_weights(spec)):
        if w == 0:
            continue
        term = periodic_eval(spec.kind, m, (j + x) / k, side)
        total += w * term if spec.character.is_real else w * float(term)
    return total * scale  # type: ignore[no-any-return]


def char_periodic_eval(
    spec: CharPeriodicSpec, x: Fraction | int, side: str = SIDE_RIGHT
) -> Fraction | complex:
    """B̄_{m,χ}(x) = k^{m-1} Σ conj(χ)(j) B̄_m((j+x)/k) and
    Ē_{m,χ}(x) = k^m Σ (-1)^j conj(χ)(j) Ē_m((j+x)/k).

    Exact for real χ, complex double otherwise.
    """
    _check_side(side)
    return _char_periodic_cached(spec, Fraction(x), side)


def _exact_weights(spec: CharPeriodicSpec) -> list[Fraction | GaussianRational]:
    chi = spec.character
    out: list[Fraction | GaussianRational] = []
    for j in range(spec.modulus):
        value = chi(j).conjugate()
        w = value.to_rational() if chi.is_real else value.to_gaussian()
        out.append(-w if spec.kind == KIND_EULER and j % 2 else w)
    return out


@lru_cache(maxsize=1 << 16)
def _char_periodic_exact_cached(
    spec: CharPeriodicSpec, x: Fraction, side: str
) -> Fraction | GaussianRational:
    k = spec.modulus
    m = spec.order
    scale = k ** (m - 1) if spec.kind == KIND_BERNOULLI else k**m
    total: Fraction | GaussianRational = Fraction(0)
    for j, w in enumerate(_exact_weights(spec)):
        if w == 0:
            continue
        total = total + w * periodic_eval(spec.kind, m, (j + x) / k, side)
    return total * scale


def char_periodic_exact(
    spec: CharPeriodicSpec, x: Fraction | int, side: str = SIDE_RIGHT
) -> Fraction | GaussianRational:
    """char_periodic_eval in exact arithmetic, for χ with values in Q(i)."""
    _check_side(side)
    if not spec.character.is_gaussian:
        raise EulerFunctionError(
            f"character {spec.character.label} has values outside Q(i); use char_periodic_eval"
        )
    return _char_periodic_exact_cached(spec, Fraction(x), side)


def char_euler_at_zero(m: int, chi: DirichletCharacter) -> Fraction | complex:
    """Ē_{m,conj(χ)}(0), the boundary constant of the summation formulas."""
    return char_periodic_eval(euler_spec(m, conjugate(chi)), 0)


@lru_cache(maxsize=None)
def boundary_values(chi: DirichletCharacter, upto: int) -> tuple[Fraction | complex, ...]:
    """Ē_{j,conj(χ)}(0) for j = 0..upto."""
    return tuple(char_euler_at_zero(j, chi) for j in range(upto + 1))


@lru_cache(maxsize=None)
def boundary_values_exact(
    chi: DirichletCharacter, upto: int
) -> tuple[Fraction | GaussianRational, ...]:
    """boundary_values in exact arithmetic, for χ with values in Q(i)."""
    return tuple(char_periodic_exact(euler_spec(j, conjugate(chi)), 0) for j in range(upto + 1))


def char_euler_poly(m: int, chi: DirichletCharacter, a: Any) -> Any:
    """Polynomial continuation Σ_j C(m,j) Ē_{j,conj(χ)}(0) a^{m-j}."""
    values = boundary_values(chi, m)
    return sum(math.comb(m, j) * values[j] * a ** (m - j) for j in range(m + 1))


def vanishes_at_zero(m: int, chi: DirichletCharacter) -> bool:
    """True when parity forces Ē_{m,conj(χ)}(0) = 0."""
    return -chi.sign * (-1) ** m != 1


def magnitude_bound(l: int, k: int) -> float:  # noqa: E741
    """Uniform bound 4 l! ζ(l+1) (k/π)^{l+1} on |Ē_{l,χ}| for l >= 1."""
    if l < 1:
        raise EulerFunctionError(f"bound needs l >= 1, got {l}")
    zeta = hurwitz_zeta(l + 1, 1.0).real
    return 4.0 * math.factorial(l) * zeta * (k / math.pi) ** (l + 1)


def euler_bernoulli_link_defect(p: int) -> Fraction:
    """2(2^p - 1) B_p + p E_{p-1}(0), which vanishes for p >= 1."""
    return 2 * (2**p - 1) * bernoulli_number(p) + p * euler_at_zero(p - 1)


# Vectorized kernels


def _shift_poly(coeffs: tuple[Fraction, ...], rho: int, k: int) -> list[Fraction]:
    """Coefficients in u of P((rho + u) / k)."""
    out = [Fraction(0)] * len(coeffs)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        base = c / Fraction(k) ** i
        for t in range(i + 1):
            out[t] += base * math.comb(i, t) * rho ** (i - t)
    return out


@lru_cache(maxsize=None)
def char_pieces(spec: CharPeriodicSpec) -> tuple[tuple[Any, ...], ...]:
    """Polynomial in u of the function on [r, r+1), for r over one period."""
    k = spec.modulus
    m = spec.order
    coeffs = poly_coeffs(spec.kind, m).coeffs
    scale = k ** (m - 1) if spec.kind == KIND_BERNOULLI else k**m
    weights = _weights(spec)
    shifted = [_shift_poly(coeffs, rho, k) for rho in range(k)]
    pieces: list[tuple[Any, ...]] = []
    for r in range(spec.period):
        acc: list[Any] = [0] * (m + 1)
        for j, w in enumerate(weights):
            if w == 0:
                continue
            q, rho = divmod(j + r, k)
            sign = -1 if spec.kind == KIND_EULER and q % 2 else 1
            for t, c in enumerate(shifted[rho]):
                acc[t] += sign * w * c
        pieces.append(tuple(scale * a for a in acc))
    return tuple(pieces)


def _horner(table: NDArray[Any], idx: NDArray[np.int64], u: NDArray[np.float64]) -> NDArray[Any]:
    rows = table[idx]
    value = rows[:, -1].copy()
    for col in range(table.shape[1] - 2, -1, -1):
        value = value * u + rows[:, col]
    return value


IntegerFix = Callable[[NDArray[np.int64]], Any]


def _piecewise_kernel(
    table: NDArray[Any], period: int, side: str, integer_fix: IntegerFix | None
) -> Kernel:
    def kernel(x: NDArray[np.float64]) -> NDArray[Any]:
        x = np.asarray(x, dtype=float)
        flat = x.ravel()
        if side == SIDE_LEFT:
            r = np.ceil(flat).astype(np.int64) - 1
        else:
            r = np.floor(flat).astype(np.int64)
        u = flat - r
        value = _horner(table, np.mod(r, period), u)
        if side == SIDE_MID:
            at_int = u == 0
            if at_int.any():
                left = _horner(table, np.mod(r[at_int] - 1, period), np.ones(int(at_int.sum())))
                value[at_int] = 0.5 * (value[at_int] + left)
        elif integer_fix is not None:
            at_int = u == 0
            if at_int.any():
                value[at_int] = value[at_int] + integer_fix(r[at_int])
        return value.reshape(x.shape)

    return kernel


@lru_cache(maxsize=None)
def char_periodic_kernel(spec: CharPeriodicSpec, side: str = SIDE_RIGHT) -> Kernel:
    """Vectorized B̄_{m,χ} / Ē_{m,χ} on float arrays."""
    _check_side(side)
    pieces = char_pieces(spec)
    dtype = float if spec.character.is_real else complex
    table = np.array([[complex(c) if dtype is complex else float(c) for c in p] for p in pieces],
                     dtype=dtype)
    fix: IntegerFix | None = None
    if spec.kind == KIND_BERNOULLI and spec.order == 1 and side == SIDE_RIGHT:
        # B̄_1 is zero, not -1/2, where (j + x)/k is an integer
        conj = np.conj(spec.character.complex_table)
        if spec.character.is_real:
            conj = conj.real

        def fix(r: NDArray[np.int64]) -> NDArray[Any]:
            return 0.5 * conj[np.mod(-r, spec.modulus)]  # type: ignore[no-any-return]

    logger.debug("Built %s kernel of order %d mod %d", spec.kind, spec.order, spec.modulus)
    return _piecewise_kernel(table, spec.period, side, fix)


@lru_cache(maxsize=None)
def periodic_kernel(kind: str, n: int, side: str = SIDE_RIGHT) -> Kernel:
    """Vectorized B̄_n / Ē_n on float arrays."""
    _check_kind(kind)
    _check_side(side)
    if kind == KIND_BERNOULLI and n < 1:
        raise EulerFunctionError("periodic Bernoulli functions need n >= 1")
    coeffs = [float(c) for c in poly_coeffs(kind, n).coeffs]
    if kind == KIND_EULER:
        table = np.array([coeffs, [-c for c in coeffs]])
        return _piecewise_kernel(table, 2, side, None)
    table = np.array([coeffs])
    fix: IntegerFix | None = (lambda r: 0.5) if n == 1 and side == SIDE_RIGHT else None
    return _piecewise_kernel(table, 1, side, fix)
