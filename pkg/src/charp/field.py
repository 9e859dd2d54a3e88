"""Arithmetic in the prime field F_p.

Elements carry their characteristic so that values from different fields
cannot be combined silently.  The residue is always stored reduced into
``[0, p)``.  Characteristics are restricted to ``2 <= p < 2**16`` so that
products of residues fit comfortably in machine integers.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_CHARACTERISTIC = 1 << 16


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for n < 2**16."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_characteristic(p: int) -> int:
    """Return ``p`` if it is a valid field characteristic, else raise ValueError."""
    if not isinstance(p, int) or not 2 <= p < MAX_CHARACTERISTIC:
        raise ValueError(f"characteristic must satisfy 2 <= p < 2**16, got {p!r}")
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    return p


@dataclass(frozen=True)
class FieldElement:
    """An element of F_p, stored as its least non-negative residue."""

    residue: int
    p: int

    def __post_init__(self):
        check_characteristic(self.p)
        object.__setattr__(self, "residue", self.residue % self.p)

    def _coerce(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"field mismatch: F_{self.p} vs F_{other.p}")
        return other.residue

    def __add__(self, other):
        return FieldElement(self.residue + self._coerce(other), self.p)

    def __sub__(self, other):
        return FieldElement(self.residue - self._coerce(other), self.p)

    def __mul__(self, other):
        return FieldElement(self.residue * self._coerce(other), self.p)

    def __neg__(self):
        return FieldElement(-self.residue, self.p)

    def __bool__(self):
        return self.residue != 0

    def inverse(self) -> "FieldElement":
        return field_inv(self)

    def __repr__(self):
        return f"{self.residue} (mod {self.p})"


def field_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse in F_p; raises ZeroDivisionError for a = 0."""
    if a.residue == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{a.p}")
    return FieldElement(pow(a.residue, -1, a.p), a.p)
