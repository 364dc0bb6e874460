"""Generating functions of the boundary values Ē_{j,χ̄}(0).

Each kernel is a closed-form function of t whose Taylor coefficients at
0 are, up to parity selection, Ē_{j,χ̄}(0)/j!. Coefficients are extracted
numerically by an FFT on a circle well inside the radius of convergence.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Callable

import numpy as np
from numpy.typing import NDArray

from boolechar.arith.characters import DirichletCharacter
from boolechar.arith.eulerfun import boundary_values
from boolechar.formulas.lfunc import LFunctionError, check_character, signed_values
from boolechar.shared.constants import (
    KERNEL_COS,
    KERNEL_COSH,
    KERNEL_EXP,
    KERNEL_SIN,
    KERNEL_SINH,
    VALID_KERNELS,
)

logger = logging.getLogger(__name__)

FFT_POINTS = 128
RADIUS_FRACTION = 0.5

KernelFn = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]

# Which coefficients the kernel reproduces: all of them, or the alternating
# even-index or odd-index subsequence.
_ALL = "all"
_EVEN_ALTERNATING = "even"
_ODD_ALTERNATING = "odd"


def _weighted(chi: DirichletCharacter, fn: Callable[[Any], Any], t: Any) -> Any:
    c = signed_values(chi)[: chi.modulus]
    n = np.arange(chi.modulus)
    return np.sum(c[:, None] * fn(n[:, None] * t[None, :]), axis=0)


def _build(kernel: str, chi: DirichletCharacter) -> tuple[KernelFn, str]:
    k = chi.modulus

    def exp_kernel(t: Any) -> Any:
        return 2 * _weighted(chi, np.exp, t) / (np.exp(k * t) + 1)

    if kernel == KERNEL_EXP:
        return exp_kernel, _ALL

    if chi.sign == -1:
        odd_forms: dict[str, tuple[KernelFn, str]] = {
            KERNEL_COS: (lambda t: 2 * _weighted(chi, np.cos, t) / (1 + np.cos(k * t)),
                         _EVEN_ALTERNATING),
            KERNEL_SIN: (lambda t: 2 * _weighted(chi, np.sin, t) / np.sin(k * t),
                         _EVEN_ALTERNATING),
            KERNEL_COSH: (lambda t: 2 * _weighted(chi, np.cosh, t) / (np.cosh(k * t) + 1), _ALL),
            KERNEL_SINH: (lambda t: 2 * _weighted(chi, np.sinh, t) / np.sinh(k * t), _ALL),
        }
        return odd_forms[kernel]

    even_forms: dict[str, tuple[KernelFn, str]] = {
        KERNEL_SIN: (lambda t: 2 * _weighted(chi, np.sin, t) / (1 + np.cos(k * t)),
                     _ODD_ALTERNATING),
        KERNEL_COS: (lambda t: -2 * _weighted(chi, np.cos, t) / np.sin(k * t), _ODD_ALTERNATING),
        KERNEL_SINH: (lambda t: 2 * _weighted(chi, np.sinh, t) / (np.cosh(k * t) + 1), _ALL),
        KERNEL_COSH: (lambda t: 2 * _weighted(chi, np.cosh, t) / np.sinh(k * t), _ALL),
    }
    return even_forms[kernel]


def _check(kernel: str, chi: DirichletCharacter, order: int) -> None:
    if kernel not in VALID_KERNELS:
        raise LFunctionError(f"Unknown kernel '{kernel}'. Must be one of: {sorted(VALID_KERNELS)}")
    check_character(chi)
    if order < 0:
        raise LFunctionError(f"order must be >= 0, got {order}")


def kernel_function(kernel: str, chi: DirichletCharacter) -> KernelFn:
    """The generating kernel as a vectorized function of complex t."""
    _check(kernel, chi, 0)
    return _build(kernel, chi)[0]


def gf_coefficients(kernel: str, chi: DirichletCharacter, order: int) -> list[complex | float]:
    """Taylor coefficients 0..J of the kernel, by FFT on |t| = π/(2k)."""
    _check(kernel, chi, order)
    fn, _ = _build(kernel, chi)
    radius = RADIUS_FRACTION * math.pi / chi.modulus
    points = radius * np.exp(2j * math.pi * np.arange(FFT_POINTS) / FFT_POINTS)
    raw = np.fft.fft(fn(points)) / FFT_POINTS
    coeffs = [complex(raw[j]) / radius**j for j in range(order + 1)]
    logger.debug("gf %s mod %d: %d coefficients", kernel, chi.modulus, order + 1)
    if chi.is_real:
        return [c.real for c in coeffs]
    return list(coeffs)


def gf_expected(kernel: str, chi: DirichletCharacter, order: int) -> list[complex | float]:
    """Coefficients the kernel should have: Ē_{j,χ̄}(0)/j! with the kernel's selection."""
    _check(kernel, chi, order)
    _, selection = _build(kernel, chi)
    values = boundary_values(chi, order)
    out: list[complex | float] = []
    for j in range(order + 1):
        base: Any = values[j] / math.factorial(j)
        if selection == _EVEN_ALTERNATING:
            base = (-1) ** (j // 2) * base if j % 2 == 0 else 0
        elif selection == _ODD_ALTERNATING:
            base = (-1) ** (j // 2) * base if j % 2 == 1 else 0
        out.append(float(base) if chi.is_real else complex(base))
    return out
