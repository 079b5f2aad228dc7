"""Hexagon/square tables and the four-family comparison table."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, fields

from .config import disk_point_count, disk_sq_radius_for_points, lattice_disk
from .distances import (disk_distance_overestimate, distinct_distances_exact,
                        distinct_distances_hex, distinct_distances_square)
from .lattice import Lattice
from .numtheory import Form, build_sieve

HEX_S_MAX = 23
SQUARE_S_MAX = 39

# The comparison table scans hexagons from the largest one in the first table.
TABLE2_S_START = 23
TABLE2_ROWS = 98
# |sqrt(n1) - round(sqrt(n1))| below this selects a row.  0.05 is what
# reproduces the published selection (23, 34, 38, ..., 997) exactly.
TABLE2_CLOSENESS = 0.05
# The published disk distance estimates count j = 0 along with 1..floor(4R).
TABLE2_COUNT_ZERO = True


@dataclass(frozen=True)
class TableRow1:
    family: str  # "hex" or "square"
    s: int
    n: int
    k: int


@dataclass(frozen=True)
class TableRow2:
    s: int
    n1: int
    k1: int
    s2: int
    n2: int
    k2: int
    n3: int
    k3: int
    n4: int
    k4: int

    @property
    def ratios(self) -> dict[str, float]:
        return {"k1_k2": self.k1 / self.k2, "k3_k4": self.k3 / self.k4,
                "k3_k1": self.k3 / self.k1, "k4_k2": self.k4 / self.k2}


def table1(hex_s_max: int = HEX_S_MAX, sq_s_max: int = SQUARE_S_MAX) -> list[TableRow1]:
    if hex_s_max < 2 or sq_s_max < 2:
        raise ValueError("table bounds must be >= 2")
    rows = [TableRow1("hex", s, 3 * s * s - 3 * s + 1, distinct_distances_hex(s))
            for s in range(2, hex_s_max + 1)]
    rows += [TableRow1("square", s, s * s, distinct_distances_square(s))
             for s in range(2, sq_s_max + 1)]
    return rows


def near_square(n: int, closeness: float = TABLE2_CLOSENESS) -> int | None:
    """The integer nearest sqrt(n) if it is within ``closeness``, else None."""
    root = math.sqrt(n)
    nearest = round(root)
    return nearest if abs(root - nearest) < closeness else None


def table2_sides(row_limit: int = TABLE2_ROWS, s_start: int = TABLE2_S_START,
                 closeness: float = TABLE2_CLOSENESS) -> list[tuple[int, int]]:
    """The first ``row_limit`` pairs (s, s2) with |H_s| within ``closeness`` of s2^2 in root."""
    if row_limit < 1:
        raise ValueError("row_limit must be >= 1")
    out = []
    s = max(s_start, 2)
    while len(out) < row_limit:
        s2 = near_square(3 * s * s - 3 * s + 1, closeness)
        if s2 is not None:
            out.append((s, s2))
        s += 1
    return out


def table2(row_limit: int = TABLE2_ROWS, *, s_start: int = TABLE2_S_START,
           closeness: float = TABLE2_CLOSENESS, exact_disks: bool = False,
           count_zero: bool = TABLE2_COUNT_ZERO, threads: int = 1) -> list[TableRow2]:
    """Hexagon, square array, and the two lattice disks at matching sizes.

    Disks use the radius that gives them about n1 points.  Their distance
    counts k3, k4 are the sieve estimate (represented integers up to the
    squared diameter) unless ``exact_disks`` is set.
    """
    sides = table2_sides(row_limit, s_start, closeness)
    sieves = {}
    if not exact_disks:
        n_max = max(3 * s * s - 3 * s + 1 for s, _ in sides)
        for lattice in Lattice:
            limit = math.floor(4 * disk_sq_radius_for_points(lattice, n_max))
            sieves[lattice] = build_sieve(Form.for_lattice(lattice), limit)

    def disk_columns(lattice: Lattice, n1: int) -> tuple[int, int]:
        radius = disk_sq_radius_for_points(lattice, n1)
        if exact_disks:
            disk = lattice_disk(lattice, radius)
            return len(disk), len(distinct_distances_exact(disk, allow_large=True))
        k = disk_distance_overestimate(lattice, radius, sieves[lattice], include_zero=count_zero)
        return disk_point_count(lattice, radius), k

    def row(side: tuple[int, int]) -> TableRow2:
        s, s2 = side
        n1 = 3 * s * s - 3 * s + 1
        n3, k3 = disk_columns(Lattice.TRIANGULAR, n1)
        n4, k4 = disk_columns(Lattice.SQUARE, n1)
        return TableRow2(s, n1, distinct_distances_hex(s), s2, s2 * s2,
                         distinct_distances_square(s2), n3, k3, n4, k4)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(row, sides))
    return [row(side) for side in sides]


def _columns(rows) -> tuple[list[str], list[list[str]]]:
    first = rows[0]
    header = [f.name for f in fields(first)]
    body = [[str(v) for v in astuple(r)] for r in rows]
    if isinstance(first, TableRow2):
        header += list(first.ratios)
        for cells, r in zip(body, rows):
            cells += [f"{v:.5f}" for v in r.ratios.values()]
    return header, body


def emit(rows, fmt: str = "csv") -> str:
    if not rows:
        raise ValueError("no rows to emit")
    if fmt not in ("csv", "markdown"):
        raise ValueError(f"unknown format {fmt!r}; expected csv or markdown")
    if len({type(r) for r in rows}) != 1:
        raise ValueError("rows of different tables cannot be mixed")
    header, body = _columns(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(cells) + " |" for cells in body]
    return "\n".join(lines) + "\n"
