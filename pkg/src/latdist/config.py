"""Configuration families: hexagonal arrays, square arrays, lattice disks, polygons."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from typing import Iterable

import numpy as np

from .lattice import COORD_LIMIT, Lattice, LatticeRangeError


@dataclass(frozen=True, eq=False)
class Configuration:
    """A finite, duplicate-free set of lattice points.

    Points live in a read-only ``(n, 2)`` int64 array sorted lexicographically
    by ``(a, b)``, so two configurations with the same point set compare equal.
    Build instances with `Configuration.from_points`.
    """

    lattice: Lattice
    points: np.ndarray
    label: str = ""

    @classmethod
    def from_points(cls, lattice: Lattice, points, label: str = "") -> "Configuration":
        arr = np.asarray(points, dtype=np.int64)
        if arr.size == 0:
            raise ValueError("a configuration needs at least one point")
        arr = arr.reshape(-1, 2)
        if np.abs(arr).max() > COORD_LIMIT:
            raise LatticeRangeError("configuration point outside |a|,|b| <= 2^30")
        arr = np.unique(arr, axis=0)
        arr.flags.writeable = False
        return cls(lattice, arr, label)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return (tuple(p) for p in self.points.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.lattice is other.lattice and np.array_equal(self.points, other.points)

    def __hash__(self) -> int:
        return hash((self.lattice, self.points.tobytes()))

    def point_set(self) -> set[tuple[int, int]]:
        return set(self)

    def translated(self, da: int, db: int) -> "Configuration":
        return Configuration.from_points(
            self.lattice, self.points + np.array([da, db]), self.label)

    def relabeled(self, label: str) -> "Configuration":
        return Configuration(self.lattice, self.points, label)


@dataclass(frozen=True)
class SymbolicPolygon:
    """Vertices of a regular n-gon, optionally with its center.

    Never materialised as coordinates; only its distance count is used.
    """

    n: int
    with_center: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"a regular polygon needs n >= 3, got {self.n}")

    @property
    def point_count(self) -> int:
        return self.n + 1 if self.with_center else self.n


def polygon(n: int, with_center: bool = False) -> SymbolicPolygon:
    return SymbolicPolygon(n, with_center, f"R_{n}" + ("+" if with_center else ""))


def _require_side(s: int) -> None:
    if s < 1:
        raise ValueError(f"side length must be >= 1, got {s}")


def hex_array(s: int) -> Configuration:
    """H_s centred at the origin: ``|a|, |b|, |a+b| <= s-1``.

    The leftmost vertex is ``<-(s-1), 0>``; translate by ``<s-1, 0>`` to put
    it at the origin.
    """
    _require_side(s)
    r = np.arange(-(s - 1), s)
    a, b = np.meshgrid(r, r, indexing="ij")
    keep = np.abs(a + b) <= s - 1
    pts = np.stack([a[keep], b[keep]], axis=1)
    return Configuration.from_points(Lattice.TRIANGULAR, pts, f"H_{s}")


def square_array(s: int) -> Configuration:
    """The s x s array ``{0, ..., s-1}^2`` in the square lattice."""
    _require_side(s)
    r = np.arange(s)
    a, b = np.meshgrid(r, r, indexing="ij")
    pts = np.stack([a.ravel(), b.ravel()], axis=1)
    return Configuration.from_points(Lattice.SQUARE, pts, f"square({s})")


def _disk_rows(lattice: Lattice, max_sq_radius: float):
    """Yield ``(b, a_lo, a_hi)`` covering every point of norm <= max_sq_radius.

    Row bounds are exact integer square roots; since norms are integers,
    ``norm <= R`` is the same as ``norm <= floor(R)``.
    """
    if not max_sq_radius > 0:
        raise ValueError(f"squared radius must be positive, got {max_sq_radius}")
    m = math.floor(max_sq_radius)
    if lattice is Lattice.TRIANGULAR:
        # a^2 + ab + b^2 <= m  <=>  (2a + b)^2 <= 4m - 3b^2
        b_max = isqrt(4 * m // 3)
        for b in range(-b_max, b_max + 1):
            r = isqrt(4 * m - 3 * b * b)
            yield b, -((r + b) // 2), (r - b) // 2
    else:
        b_max = isqrt(m)
        for b in range(-b_max, b_max + 1):
            r = isqrt(m - b * b)
            yield b, -r, r


def disk_point_count(lattice: Lattice, max_sq_radius: float) -> int:
    """Number of lattice points in the closed origin-centred disk, without building it."""
    return sum(hi - lo + 1 for _, lo, hi in _disk_rows(lattice, max_sq_radius))


def _disk(lattice: Lattice, max_sq_radius: float, label: str) -> Configuration:
    chunks = []
    for b, lo, hi in _disk_rows(lattice, max_sq_radius):
        a = np.arange(lo, hi + 1, dtype=np.int64)
        chunks.append(np.stack([a, np.full_like(a, b)], axis=1))
    return Configuration.from_points(lattice, np.concatenate(chunks), label)


def tri_disk(max_sq_radius: float) -> Configuration:
    return _disk(Lattice.TRIANGULAR, max_sq_radius, f"tri_disk({max_sq_radius:g})")


def sq_disk(max_sq_radius: float) -> Configuration:
    return _disk(Lattice.SQUARE, max_sq_radius, f"sq_disk({max_sq_radius:g})")


def lattice_disk(lattice: Lattice, max_sq_radius: float) -> Configuration:
    if lattice is Lattice.TRIANGULAR:
        return tri_disk(max_sq_radius)
    return sq_disk(max_sq_radius)


def disk_sq_radius_for_points(lattice: Lattice, n: int) -> float:
    """Squared radius whose disk holds about n points: area n times the covolume."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if lattice is Lattice.TRIANGULAR:
        return math.sqrt(3) * n / (2 * math.pi)
    return n / math.pi


# --- text format -----------------------------------------------------------
#
#   lattice: tri|sq
#   a b
#   ...
# with '#' comments anywhere.  A "# label: ..." comment restores the label.

def format_configuration(config: Configuration, comments: Iterable[str] = ()) -> str:
    lines = [f"lattice: {config.lattice.value}"]
    if config.label:
        lines.append(f"# label: {config.label}")
    lines.extend(f"# {c}" for c in comments)
    lines.extend(f"{a} {b}" for a, b in config.points.tolist())
    return "\n".join(lines) + "\n"


def parse_configuration(text: str, label: str = "") -> Configuration:
    lattice = None
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("label:") and not label:
                label = body[len("label:"):].strip()
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if lattice is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "lattice":
                raise ValueError(f"line {lineno}: expected 'lattice: tri|sq' header")
            lattice = Lattice.parse(value)
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            pts.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}") from None
    if lattice is None:
        raise ValueError("missing 'lattice:' header")
    if not pts:
        raise ValueError("configuration file contains no points")
    return Configuration.from_points(lattice, pts, label)


def write_configuration(path, config: Configuration, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_configuration(config, comments))


def read_configuration(path) -> Configuration:
    return parse_configuration(Path(path).read_text())
