"""Exact arithmetic in Z_n: canonical residues, units, inverses, signed powers.

Everything downstream (coefficient tensors, state sums, invariant values)
stores its scalars as :class:`RingElement` instances.  Residues are kept
reduced in ``[0, n)`` so equality and hashing are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class NonUnitError(ArithmeticError):
    """Raised when an inverse (or negative power) of a non-unit is requested."""


class RingMismatchError(ValueError):
    """Raised when elements of different moduli are combined."""


@dataclass(frozen=True)
class ModulusRing:
    """The ring Z_n of integers modulo ``n`` (n >= 2)."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    def element(self, value: int) -> "RingElement":
        return RingElement(value % self.modulus, self)

    def zero(self) -> "RingElement":
        return self.element(0)

    def one(self) -> "RingElement":
        return self.element(1)

    def units(self) -> list["RingElement"]:
        """All units of Z_n in ascending residue order."""
        return [self.element(v) for v in range(self.modulus) if gcd(v, self.modulus) == 1]

    def __repr__(self):
        return f"Z_{self.modulus}"


@dataclass(frozen=True)
class RingElement:
    """A canonical residue in a fixed :class:`ModulusRing`.

    Immutable; arithmetic returns new elements.  Mixing moduli raises
    :class:`RingMismatchError` rather than silently coercing.
    """

    value: int
    ring: ModulusRing

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            object.__setattr__(self, "value", self.value % self.ring.modulus)

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.ring.modulus != self.ring.modulus:
            raise RingMismatchError(
                f"cannot combine elements of Z_{self.ring.modulus} and Z_{other.ring.modulus}"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement((self.value + other.value) % self.ring.modulus, self.ring)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement((self.value - other.value) % self.ring.modulus, self.ring)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement((self.value * other.value) % self.ring.modulus, self.ring)

    def __neg__(self) -> "RingElement":
        return RingElement((-self.value) % self.ring.modulus, self.ring)

    def is_unit(self) -> bool:
        return gcd(self.value, self.ring.modulus) == 1

    def inv(self) -> "RingElement":
        """Multiplicative inverse via extended Euclid (modulus need not be prime)."""
        g, s, _ = _extended_gcd(self.value, self.ring.modulus)
        if g != 1:
            raise NonUnitError(
                f"{self.value} is not a unit of Z_{self.ring.modulus} (gcd={g})"
            )
        return RingElement(s % self.ring.modulus, self.ring)

    def __pow__(self, k: int) -> "RingElement":
        """Signed integer power; negative exponents require a unit base."""
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            base = self.inv().value
            k = -k
        else:
            base = self.value
        return RingElement(pow(base, k, self.ring.modulus), self.ring)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.ring.modulus})"

    def __str__(self):
        return str(self.value)


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t
