"""Dirichlet characters mod k with exact root-of-unity values.

Characters are built on fixed CRT generators of (Z/kZ)*: a primitive
root for each odd prime power, and -1, 5 for powers of two. A character
is named by its exponent vector on those generators, so enumeration
order is deterministic.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any

import numpy as np
from numpy.typing import NDArray

logger = logging.getLogger(__name__)

PARITY_EVEN = "even"
PARITY_ODD = "odd"

_EXACT_EMBEDDINGS: dict[Fraction, complex] = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


class CharacterError(Exception):
    """Raised for invalid moduli, labels or character operations."""


class CharacterNotFoundError(CharacterError):
    """Raised when a label does not name a character of the modulus."""


@dataclass(frozen=True)
class GaussianRational:
    """Exact re + im*i with rational parts, for values in Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _coerce(other: object) -> GaussianRational | None:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other))
        return None

    def __add__(self, other: object) -> Any:
        if isinstance(other, (float, complex)):
            return complex(self) + other
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(self.re + rhs.re, self.im + rhs.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: object) -> Any:
        if isinstance(other, (float, complex)):
            return complex(self) - other
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(self.re - rhs.re, self.im - rhs.im)

    def __rsub__(self, other: object) -> Any:
        return -self + other

    def __mul__(self, other: object) -> Any:
        if isinstance(other, (float, complex)):
            return complex(self) * other
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(
            self.re * rhs.re - self.im * rhs.im, self.re * rhs.im + self.im * rhs.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> GaussianRational:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a Gaussian rational by zero")
        return GaussianRational(self.re / other, self.im / other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (float, complex)):
            return complex(self) == other
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.re == rhs.re and self.im == rhs.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class CharacterValue:
    """Zero, or the root of unity exp(2*pi*i*exponent) with 0 <= exponent < 1."""

    is_zero: bool
    exponent: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not 0 <= self.exponent < 1:
            raise CharacterError(f"exponent must lie in [0, 1), got {self.exponent}")
        if self.is_zero and self.exponent != 0:
            raise CharacterError("a zero value carries exponent 0")

    @classmethod
    def root(cls, exponent: Fraction | int) -> CharacterValue:
        return cls(False, Fraction(exponent) % 1)

    def __mul__(self, other: CharacterValue) -> CharacterValue:
        if self.is_zero or other.is_zero:
            return ZERO
        return CharacterValue.root(self.exponent + other.exponent)

    def conjugate(self) -> CharacterValue:
        if self.is_zero:
            return self
        return CharacterValue.root(-self.exponent)

    @property
    def is_real(self) -> bool:
        return self.is_zero or self.exponent in (0, Fraction(1, 2))

    def to_rational(self) -> Fraction:
        """Exact value in {0, 1, -1}; only defined for real values."""
        if self.is_zero:
            return Fraction(0)
        if self.exponent == 0:
            return Fraction(1)
        if self.exponent == Fraction(1, 2):
            return Fraction(-1)
        raise CharacterError(f"value exp(2*pi*i*{self.exponent}) is not real")

    @property
    def is_gaussian(self) -> bool:
        return self.is_zero or (4 * self.exponent).denominator == 1

    def to_gaussian(self) -> GaussianRational:
        """Exact value in {0, ±1, ±i}; only defined for quarter turns."""
        if not self.is_gaussian:
            raise CharacterError(f"value exp(2*pi*i*{self.exponent}) is not in Q(i)")
        z = self.to_complex()
        return GaussianRational(Fraction(int(z.real)), Fraction(int(z.imag)))

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        exact = _EXACT_EMBEDDINGS.get(self.exponent)
        if exact is not None:
            return exact
        angle = 2.0 * math.pi * float(self.exponent)
        return complex(math.cos(angle), math.sin(angle))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_real:
            return str(self.to_rational())
        return f"e({self.exponent})"


ZERO = CharacterValue(True)
ONE = CharacterValue(False)


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod k given by its full value table."""

    modulus: int
    values: tuple[CharacterValue, ...]
    conductor: int
    index: tuple[int, ...] = ()
    number: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise CharacterError(f"modulus must be >= 1, got {self.modulus}")
        if len(self.values) != self.modulus:
            raise CharacterError(
                f"value table has {len(self.values)} entries for modulus {self.modulus}"
            )
        for n, value in enumerate(self.values):
            if value.is_zero != (math.gcd(n, self.modulus) > 1):
                raise CharacterError(f"value at {n} must be zero iff gcd({n}, k) > 1")
        if self.modulus % self.conductor:
            raise CharacterError(
                f"conductor {self.conductor} does not divide modulus {self.modulus}"
            )

    def __call__(self, n: int) -> CharacterValue:
        return self.values[n % self.modulus]

    @property
    def label(self) -> str:
        return f"{self.modulus}.{self.number}"

    @property
    def parity(self) -> str:
        return PARITY_EVEN if self(-1) == ONE else PARITY_ODD

    @property
    def is_even(self) -> bool:
        return self.parity == PARITY_EVEN

    @property
    def sign(self) -> int:
        """χ(-1) as an integer."""
        return 1 if self.is_even else -1

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_principal(self) -> bool:
        return all(v.is_zero or v.exponent == 0 for v in self.values)

    @cached_property
    def is_real(self) -> bool:
        return all(v.is_real for v in self.values)

    @cached_property
    def is_gaussian(self) -> bool:
        """True when every value is 0, ±1 or ±i."""
        return all(v.is_gaussian for v in self.values)

    def rational(self, n: int) -> Fraction:
        return self(n).to_rational()

    def exact(self, n: int) -> Fraction | GaussianRational:
        """Fraction for real χ, GaussianRational for χ with values in Q(i)."""
        if self.is_real:
            return self.rational(n)
        if self.is_gaussian:
            return self(n).to_gaussian()
        raise CharacterError(f"character {self.label} has values outside Q(i)")

    def embed(self, n: int) -> complex:
        return self(n).to_complex()

    @cached_property
    def complex_table(self) -> NDArray[np.complex128]:
        """Complex embedding of values[0..k-1]."""
        return np.array([v.to_complex() for v in self.values], dtype=complex)

    def value(self, n: int) -> Fraction | complex:
        """Exact rational for real characters, complex double otherwise."""
        if self.is_real:
            return self.rational(n)
        return self.embed(n)


def char_value(chi: DirichletCharacter, n: int) -> CharacterValue:
    """Return χ(n mod k)."""
    return chi(n)


def _factorize(n: int) -> list[tuple[int, int]]:
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1
    if n > 1:
        factors.append((n, 1))
    return factors


def _multiplicative_order(g: int, q: int) -> int:
    order, x = 1, g % q
    while x != 1:
        x = x * g % q
        order += 1
    return order


def _local_generators(p: int, e: int) -> list[tuple[int, int]]:
    """(generator, order) pairs for (Z/p^e Z)*."""
    q = p**e
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            return [(q - 1, 2)]
        return [(q - 1, 2), (5, 2 ** (e - 2))]
    phi = q - q // p
    for g in range(2, q):
        if math.gcd(g, p) == 1 and _multiplicative_order(g, q) == phi:
            return [(g, phi)]
    raise CharacterError(f"no primitive root mod {q}")


def _lift(g: int, q: int, k: int) -> int:
    """The residue mod k that is g mod q and 1 mod k/q."""
    rest = k // q
    if rest == 1:
        return g % k
    # CRT: x = g + q*t with x = 1 mod rest
    t = ((1 - g) * pow(q, -1, rest)) % rest
    return (g + q * t) % k


@lru_cache(maxsize=None)
def _crt_structure(k: int) -> tuple[tuple[int, ...], tuple[int, ...], dict[int, tuple[int, ...]]]:
    """Global generators, their orders, and the discrete-log table of every unit."""
    generators: list[int] = []
    orders: list[int] = []
    for p, e in _factorize(k):
        q = p**e
        for g, order in _local_generators(p, e):
            generators.append(_lift(g, q, k))
            orders.append(order)

    logs: dict[int, tuple[int, ...]] = {}
    for vector in itertools.product(*(range(o) for o in orders)):
        n = 1
        for g, a in zip(generators, vector):
            n = n * pow(g, a, k) % k
        logs[n % k] = tuple(vector)
    return tuple(generators), tuple(orders), logs


def _conductor_of(k: int, values: tuple[CharacterValue, ...]) -> int:
    for f in range(1, k + 1):
        if k % f:
            continue
        if all(
            values[n] == ONE for n in range(1, k, f) if math.gcd(n, k) == 1
        ):
            return f
    return k


@lru_cache(maxsize=None)
def _enumerate(k: int) -> tuple[DirichletCharacter, ...]:
    _, orders, logs = _crt_structure(k)
    characters: list[DirichletCharacter] = []
    for number, index in enumerate(itertools.product(*(range(o) for o in orders))):
        table: list[CharacterValue] = []
        for n in range(k):
            log = logs.get(n)
            if log is None:
                table.append(ZERO)
                continue
            exponent = sum(
                (Fraction(a * x, o) for a, x, o in zip(index, log, orders)), start=Fraction(0)
            )
            table.append(CharacterValue.root(exponent))
        values = tuple(table)
        characters.append(
            DirichletCharacter(
                modulus=k,
                values=values,
                conductor=_conductor_of(k, values),
                index=tuple(index),
                number=number,
            )
        )
    logger.debug("Enumerated %d characters mod %d", len(characters), k)
    return tuple(characters)


def enumerate_characters(k: int) -> list[DirichletCharacter]:
    """All φ(k) characters mod k in canonical exponent-vector order."""
    if k < 2:
        raise CharacterError(f"modulus must be >= 2, got {k}")
    return list(_enumerate(k))


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def primitive_characters(k: int) -> list[DirichletCharacter]:
    return [chi for chi in enumerate_characters(k) if chi.is_primitive]


def real_primitive_characters(k: int) -> list[DirichletCharacter]:
    return [chi for chi in primitive_characters(k) if chi.is_real]


def _lookup(k: int, values: tuple[CharacterValue, ...]) -> DirichletCharacter:
    for chi in enumerate_characters(k):
        if chi.values == values:
            return chi
    raise CharacterNotFoundError(f"value table is not a character mod {k}")


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    """The character n -> conj(χ(n))."""
    if chi.is_real:
        return chi
    return _lookup(chi.modulus, tuple(v.conjugate() for v in chi.values))


def induce(chi: DirichletCharacter, modulus: int) -> DirichletCharacter:
    """Lift χ to a multiple of its modulus."""
    if modulus % chi.modulus:
        raise CharacterError(f"{modulus} is not a multiple of modulus {chi.modulus}")
    values = tuple(
        chi(n) if math.gcd(n, modulus) == 1 else ZERO for n in range(modulus)
    )
    return _lookup(modulus, values)


def find_character(k: int, label: str | int) -> DirichletCharacter:
    """Resolve a CLI-style label: 'quadratic', 'principal', or an enumeration number."""
    characters = enumerate_characters(k)
    if isinstance(label, int) or str(label).isdigit():
        number = int(label)
        if not 0 <= number < len(characters):
            raise CharacterNotFoundError(f"character number {number} out of range mod {k}")
        return characters[number]
    if label == "principal":
        return characters[0]
    if label == "quadratic":
        real = real_primitive_characters(k)
        if not real:
            raise CharacterNotFoundError(f"no real primitive character mod {k}")
        return real[0]
    raise CharacterNotFoundError(f"unknown character label '{label}'")


def to_json(chi: DirichletCharacter) -> dict[str, Any]:
    """Serialize for the CLI: exponents as 'e/d' strings, null where χ(n) = 0."""
    return {
        "label": chi.label,
        "modulus": chi.modulus,
        "conductor": chi.conductor,
        "parity": chi.parity,
        "primitive": chi.is_primitive,
        "real": chi.is_real,
        "index": list(chi.index),
        "values": [None if v.is_zero else str(v.exponent) for v in chi.values],
    }
