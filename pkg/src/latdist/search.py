"""Deterministic search for triangular-lattice sets with few distances.

Candidates are origin-centred lattice disks and hexagons; if none of them
is good enough, the smallest supersets are pruned greedily down to size.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .config import Configuration, format_configuration, hex_array, tri_disk
from .distances import distinct_distances_exact

CANDIDATE_WINDOW = 15


@dataclass(frozen=True)
class SearchBudget:
    max_seconds: float = 600
    max_candidates: int = 10_000
    seed: int = 0  # recorded with results; every strategy here is deterministic

    def __post_init__(self):
        if self.max_seconds <= 0 or self.max_candidates <= 0 or self.seed < 0:
            raise ValueError("budget limits must be positive and the seed non-negative")


@dataclass
class SearchResult:
    best: Configuration
    k_achieved: int
    n_achieved: int
    target_met: bool
    k_target: int
    n_min: int
    strategy: str = ""
    seed: int = 0
    trace: list[tuple[str, int, int]] = field(default_factory=list)

    def to_text(self) -> str:
        comments = [f"k={self.k_achieved} n={self.n_achieved}",
                    f"target k<={self.k_target} n>={self.n_min} met={str(self.target_met).lower()}",
                    f"strategy={self.strategy} seed={self.seed}"]
        return format_configuration(self.best, comments)


def _loeschian_norms():
    """Yield the values of a^2+ab+b^2 in increasing order (excluding 0)."""
    limit = 64
    seen = 0
    while True:
        r = np.arange(-limit, limit + 1)
        a, b = np.meshgrid(r, r)
        vals = np.unique(a * a + a * b + b * b)
        # every norm <= limit^2 * 3/4 is reached inside the window
        safe = vals[(vals > seen) & (vals <= 3 * limit * limit // 4)]
        for v in safe.tolist():
            yield v
        seen = int(safe[-1]) if len(safe) else seen
        limit *= 2


def enumerate_disk_candidates(n_target: int, window: int = CANDIDATE_WINDOW) -> list[Configuration]:
    """Triangular disks and centred hexagons with ``|n - n_target| <= window`` points."""
    if n_target < 2:
        raise ValueError(f"n_target must be >= 2, got {n_target}")
    lo, hi = n_target - window, n_target + window
    out = []
    for m in _loeschian_norms():
        disk = tri_disk(m)
        if len(disk) > hi:
            break
        if len(disk) >= lo:
            out.append(disk)
    s = 1
    while 3 * s * s - 3 * s + 1 <= hi:
        if 3 * s * s - 3 * s + 1 >= lo:
            out.append(hex_array(s))
        s += 1
    return sorted(out, key=lambda c: (len(c), c.label))


def _norm_matrix(config: Configuration) -> np.ndarray:
    p = config.points
    da = p[:, 0, None] - p[None, :, 0]
    db = p[:, 1, None] - p[None, :, 1]
    return config.lattice.norm_array(da, db)


def greedy_prune(start: Configuration, n_target: int) -> Configuration:
    """Delete points one at a time until ``n_target`` remain.

    Each step removes the point whose deletion kills the most distances,
    i.e. the point that is the sole carrier of the most squared-distance
    values.  Ties go to the point farthest from the current centroid, then
    to the lexicographically smallest ``(a, b)``.
    """
    n = len(start)
    if n < n_target:
        raise ValueError(f"cannot prune {n} points up to {n_target}")
    if n_target < 1:
        raise ValueError("n_target must be positive")
    if n == n_target:
        return start
    pts = start.points
    norms = _norm_matrix(start)
    size = int(norms.max()) + 1
    alive = np.ones(n, dtype=bool)
    # rows[i, v] = number of alive partners j != i with norm(p_i - p_j) = v
    rows = np.zeros((n, size), dtype=np.int64)
    idx = np.repeat(np.arange(n), n)
    np.add.at(rows, (idx, norms.ravel()), 1)
    rows[:, 0] = 0
    totals = rows.sum(axis=0) // 2

    for remaining in range(n, n_target, -1):
        live = np.flatnonzero(alive)
        sole = (rows[live] == totals) & (totals > 0)
        kills = sole.sum(axis=1)
        # exact centroid distance, scaled by the point count to stay integral
        offs = remaining * pts[live] - pts[live].sum(axis=0)
        spread = start.lattice.norm_array(offs[:, 0], offs[:, 1])
        order = np.lexsort((pts[live, 1], pts[live, 0], -spread, -kills))
        victim = live[order[0]]
        alive[victim] = False
        totals -= rows[victim]
        partners = norms[victim]
        np.subtract.at(rows, (np.arange(n), partners), 1)
        rows[:, 0] = 0
        rows[victim] = 0
    label = f"prune({start.label}->{n_target})"
    return Configuration.from_points(start.lattice, pts[alive], label)


def _rank(entry):
    config, k, _ = entry
    return (k, -len(config), config.label)


def find_witness(k_target: int, n_min: int, budget: SearchBudget | None = None) -> SearchResult:
    """Look for a triangular-lattice set with at least n_min points and at most k_target distances."""
    if k_target < 1 or n_min < 2:
        raise ValueError("need k_target >= 1 and n_min >= 2")
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.max_seconds
    trace: list[tuple[str, int, int]] = []
    evaluated: list[tuple[Configuration, int, str]] = []

    def out_of_budget() -> bool:
        return bool(evaluated) and (len(evaluated) >= budget.max_candidates
                                    or time.monotonic() > deadline)

    def evaluate(config: Configuration, strategy: str) -> int:
        k = len(distinct_distances_exact(config))
        evaluated.append((config, k, strategy))
        trace.append((f"{strategy}:{config.label}", k, len(config)))
        return k

    def finish(pool, met: bool) -> SearchResult:
        config, k, strategy = min(pool, key=_rank)
        return SearchResult(config, k, len(config), met, k_target, n_min,
                            strategy, budget.seed, trace)

    candidates = enumerate_disk_candidates(n_min)
    big_enough = [c for c in candidates if len(c) >= n_min]
    if not big_enough:
        # disk sizes jump by more than the window once disks get large
        big_enough = [c for c in enumerate_disk_candidates(n_min, window=3 * n_min)
                      if len(c) >= n_min]

    for c in big_enough:
        if out_of_budget():
            break
        evaluate(c, "disk" if c.label.startswith("tri_disk") else "hexagon")
    hits = [e for e in evaluated if e[1] <= k_target]
    if hits:
        return finish(hits, True)

    for c in big_enough:
        if out_of_budget() or len(c) == n_min:
            continue
        pruned = greedy_prune(c, n_min)
        if evaluate(pruned, "prune") <= k_target:
            return finish([evaluated[-1]], True)

    if not evaluated:
        evaluate(big_enough[0], "disk")
    return finish(evaluated, False)

