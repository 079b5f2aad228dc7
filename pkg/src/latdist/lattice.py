"""Exact integer arithmetic on the triangular and square lattices.

A point of the triangular lattice is stored by its coefficients ``<a, b>``
on the basis ``(1, 0)`` and ``(1/2, sqrt(3)/2)``; its squared length is the
Loeschian form ``a^2 + ab + b^2``.  Square lattice points are plain integer
pairs with squared length ``a^2 + b^2``.  Every distance comparison in this
package goes through these integer forms; floats only appear in `embed`.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

import numpy as np

# a^2 + ab + b^2 <= 3 * 2^60 < 2^63
COORD_LIMIT = 2**30

SQRT3_2 = math.sqrt(3) / 2


class LatticeRangeError(ValueError):
    """A coordinate falls outside the guarded 64-bit-safe range."""


class ResourceGuardError(RuntimeError):
    """A computation would exceed one of the configured size guards."""


class Lattice(enum.Enum):
    TRIANGULAR = "tri"
    SQUARE = "sq"

    @classmethod
    def parse(cls, text: str) -> "Lattice":
        key = text.strip().lower()
        aliases = {"tri": cls.TRIANGULAR, "triangular": cls.TRIANGULAR,
                   "sq": cls.SQUARE, "square": cls.SQUARE}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown lattice {text!r}") from None

    def norm(self, a: int, b: int) -> int:
        if self is Lattice.TRIANGULAR:
            return tri_norm(a, b)
        return sq_norm(a, b)

    def norm_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorised form values; callers are responsible for the range guard."""
        if self is Lattice.TRIANGULAR:
            return a * a + a * b + b * b
        return a * a + b * b


class TriPoint(NamedTuple):
    a: int
    b: int

    def norm(self) -> int:
        return tri_norm(self.a, self.b)


class SqPoint(NamedTuple):
    a: int
    b: int

    def norm(self) -> int:
        return sq_norm(self.a, self.b)


def check_range(a: int, b: int) -> None:
    if abs(a) > COORD_LIMIT or abs(b) > COORD_LIMIT:
        raise LatticeRangeError(
            f"coordinates ({a}, {b}) exceed the guard |a|,|b| <= 2^30")


def tri_norm(a: int, b: int) -> int:
    """Squared length of ``<a, b>`` in the triangular lattice."""
    check_range(a, b)
    return a * a + a * b + b * b


def sq_norm(a: int, b: int) -> int:
    """Squared length of ``(a, b)`` in the square lattice."""
    check_range(a, b)
    return a * a + b * b


def embed_tri(p) -> tuple[float, float]:
    """Cartesian coordinates of a triangular lattice point, for export only."""
    a, b = p
    check_range(a, b)
    return (a + b / 2, SQRT3_2 * b)


def embed(lattice: Lattice, p) -> tuple[float, float]:
    if lattice is Lattice.TRIANGULAR:
        return embed_tri(p)
    a, b = p
    check_range(a, b)
    return (float(a), float(b))
