"""Lower bounds on g(k) and the witness bookkeeping behind g(k) > 2k + 1.

g(k) is the largest number of planar points determining at most k
distances.  A witness ``(k, n)`` is a concrete n-point set with at most k
distances, so g(k) >= n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from types import MappingProxyType
from typing import Iterable

from .config import Configuration, SymbolicPolygon
from .distances import distinct_distances_exact, polygon_distance_count

# Resolved small cases, imported as constants.
KNOWN_G = MappingProxyType({1: 3, 2: 5, 3: 7, 4: 9, 5: 12, 6: 13})

# g(k) = 2k + 1 exactly for these k; g(k) > 2k + 1 for every other k.
TIGHT_K = frozenset({1, 2, 3, 4, 6})

# Hexagons H_3..H_8, then five arrays from the earlier literature.
HEXAGON_WITNESSES = ((8, 19), (15, 37), (23, 61), (34, 91), (46, 127), (59, 169))
ARRAY_WITNESSES = ((7, 16), (9, 21), (10, 25), (11, 27), (13, 31))
# (k, n) targets of the four configurations that close the remaining gaps.
GAP_TARGETS = ((18, 43), (21, 55), (29, 70), (40, 102))

# Below 7 the small cases are settled; from 63 on the hexagon bound wins.
WINDOW = (7, 62)


@dataclass(frozen=True)
class WitnessPair:
    k: int
    n: int
    source: str = ""

    def __post_init__(self):
        if self.k < 1 or self.n < 2:
            raise ValueError(f"invalid witness (k={self.k}, n={self.n})")


def baseline_witnesses() -> list[WitnessPair]:
    hexes = [WitnessPair(k, n, f"H_{s}") for s, (k, n) in enumerate(HEXAGON_WITNESSES, 3)]
    arrays = [WitnessPair(k, n, "array") for k, n in ARRAY_WITNESSES]
    return hexes + arrays


def witness_from_configuration(config: Configuration, source: str = "") -> WitnessPair:
    """Build a witness from an actual point set, counting its distances exactly."""
    k = len(distinct_distances_exact(config))
    return WitnessPair(k, len(config), source or config.label)


def central_hex_number(s: int) -> int:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return 3 * s * s - 3 * s + 1


def lower_bound_g(k: int) -> int:
    """g(k) >= |H_t| with t = floor(sqrt(k+1)), since H_t has at most t^2 - 1 distances."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return central_hex_number(isqrt(k + 1))


def covered_range(w: WitnessPair) -> range:
    """The k' for which ``w`` proves g(k') > 2k' + 1.

    g is non-decreasing, so g(k') >= g(w.k) >= w.n for every k' >= w.k, and
    w.n > 2k' + 1 holds exactly while k' <= (w.n - 2) // 2.
    """
    return range(w.k, (w.n - 2) // 2 + 1)


@dataclass(frozen=True)
class CoverageReport:
    gaps: tuple[int, ...]
    covered: tuple[int, ...]
    window: tuple[int, int] = WINDOW
    witnesses: tuple[WitnessPair, ...] = field(default=(), repr=False)

    @property
    def complete(self) -> bool:
        return not self.gaps

    def format(self) -> str:
        lo, hi = self.window
        lines = [f"window: {lo}..{hi} (k >= {hi + 1} by the hexagon bound)"]
        for w in self.witnesses:
            r = covered_range(w)
            span = f"{r.start}..{r.stop - 1}" if r else "none"
            lines.append(f"witness k={w.k} n={w.n} covers {span} [{w.source}]")
        gaps = ",".join(map(str, self.gaps)) if self.gaps else "none"
        lines.append(f"gaps: {gaps}")
        return "\n".join(lines)


def theorem_coverage(witnesses: Iterable[WitnessPair]) -> CoverageReport:
    witnesses = tuple(witnesses)
    lo, hi = WINDOW
    covered = set()
    for w in witnesses:
        covered.update(covered_range(w))
    window = range(lo, hi + 1)
    gaps = tuple(k for k in window if k not in covered)
    return CoverageReport(gaps, tuple(k for k in window if k in covered),
                          WINDOW, witnesses)


def g_exceeds_2k_plus_1(k: int) -> bool:
    return k not in TIGHT_K


def classify_polygon_optimality(n: int, with_center: bool = False) -> bool:
    """Whether R_n (or R_n plus center) attains g(k) for its own distance count k."""
    p = SymbolicPolygon(n, with_center)
    k = polygon_distance_count(p)
    if k in KNOWN_G:
        return p.point_count == KNOWN_G[k]
    # k >= 7: g(k) >= 2k + 2, while a polygon with k distances has at most 2k + 1 points
    return False


# --- witness list files: one "k n source" line per witness -----------------

def parse_witnesses(text: str) -> list[WitnessPair]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(maxsplit=2)
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected 'k n [source]'")
        try:
            k, n = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: k and n must be integers") from None
        out.append(WitnessPair(k, n, parts[2] if len(parts) > 2 else ""))
    return out


def format_witnesses(witnesses: Iterable[WitnessPair]) -> str:
    return "".join(f"{w.k} {w.n} {w.source or '-'}\n" for w in witnesses)


def read_witnesses(path) -> list[WitnessPair]:
    return parse_witnesses(Path(path).read_text())
