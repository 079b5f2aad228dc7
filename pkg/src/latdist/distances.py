"""Counting distinct distances exactly.

A distance is identified with its squared length, which on either lattice
is a positive integer, so "distinct distances" means distinct integer
values of the lattice form over all point differences.
"""

from __future__ import annotations

import bisect
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import signal

from .config import Configuration, SymbolicPolygon
from .lattice import Lattice, ResourceGuardError
from .numtheory import (SIEVE_LIMIT, Form, RepresentabilitySieve, build_sieve,
                        count_representable)

MAX_EXACT_POINTS = 10**5
# bitmaps of norms are used below this size, np.unique above it
_BITMAP_LIMIT = 1 << 28
_CHUNK = 256


@dataclass(frozen=True)
class SquaredDistanceSet:
    """Sorted squared distances; zero is never included."""

    values: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, v) -> bool:
        i = bisect.bisect_left(self.values, v)
        return i < len(self.values) and self.values[i] == v

    @classmethod
    def from_flags(cls, flags: np.ndarray) -> "SquaredDistanceSet":
        flags[0] = False
        return cls(tuple(np.flatnonzero(flags).tolist()))


def _max_norm(lattice: Lattice, pts: np.ndarray) -> int:
    da = int(pts[:, 0].max() - pts[:, 0].min())
    db = int(pts[:, 1].max() - pts[:, 1].min())
    # |a| <= da, |b| <= db bounds both forms by da^2 + da*db + db^2
    return da * da + da * db + db * db


def _pairwise(config: Configuration, threads: int) -> SquaredDistanceSet:
    pts = config.points
    a, b = pts[:, 0], pts[:, 1]
    n = len(pts)
    bound = _max_norm(config.lattice, pts)
    use_bitmap = bound < _BITMAP_LIMIT
    flags = np.zeros(bound + 1, dtype=bool) if use_bitmap else None

    def block(start: int):
        stop = min(start + _CHUNK, n)
        da = a[start:stop, None] - a[None, start:]
        db = b[start:stop, None] - b[None, start:]
        v = config.lattice.norm_array(da, db).ravel()
        if use_bitmap:
            flags[v] = True
            return None
        return np.unique(v)

    starts = range(0, n, _CHUNK)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(block, starts))
    else:
        parts = [block(s) for s in starts]
    if use_bitmap:
        return SquaredDistanceSet.from_flags(flags)
    vals = np.unique(np.concatenate(parts))
    return SquaredDistanceSet(tuple(int(v) for v in vals if v > 0))


def difference_vectors(config: Configuration) -> np.ndarray:
    """All vectors p - q (p, q in the configuration), via an autocorrelation.

    The indicator of the point set is laid out on its bounding box and
    correlated with itself by FFT.  Entries are non-negative integer pair
    counts with rounding error far below 1/2, so ``> 0.5`` is exact.
    """
    pts = config.points
    lo = pts.min(axis=0)
    width, height = (pts.max(axis=0) - lo + 1).tolist()
    grid = np.zeros((width, height))
    grid[pts[:, 0] - lo[0], pts[:, 1] - lo[1]] = 1.0
    corr = signal.fftconvolve(grid, grid[::-1, ::-1], mode="full")
    i, j = np.nonzero(corr > 0.5)
    return np.stack([i - (width - 1), j - (height - 1)], axis=1).astype(np.int64)


def _autocorrelation(config: Configuration) -> SquaredDistanceSet:
    d = difference_vectors(config)
    v = config.lattice.norm_array(d[:, 0], d[:, 1])
    flags = np.zeros(int(v.max()) + 1, dtype=bool)
    flags[v] = True
    return SquaredDistanceSet.from_flags(flags)


def distinct_distances_exact(config: Configuration, *, allow_large: bool = False,
                             method: str = "auto", threads: int = 1) -> SquaredDistanceSet:
    """Squared distances determined by a configuration.

    ``method`` is ``"pairwise"`` (every pair, the reference), ``"fft"``
    (autocorrelation of the bounding-box indicator) or ``"auto"``, which
    switches to the FFT route for large, compact point sets.
    """
    n = len(config)
    if n < 2:
        raise ValueError("need at least two points to determine a distance")
    if n > MAX_EXACT_POINTS and not allow_large:
        raise ResourceGuardError(
            f"{n} points exceeds the exact-count guard of {MAX_EXACT_POINTS}")
    if method == "auto":
        span = config.points.max(axis=0) - config.points.min(axis=0) + 1
        box = int(span[0]) * int(span[1])
        method = "fft" if n > 4000 and box <= 16 * n else "pairwise"
    if method == "pairwise":
        return _pairwise(config, threads)
    if method == "fft":
        return _autocorrelation(config)
    raise ValueError(f"unknown method {method!r}")


def distinct_distances_hex(s: int) -> int:
    """Distinct distances in H_s, from the origin to the upper half only.

    With the leftmost vertex of H_s at the origin, every distance is realised
    from the origin to a point ``<a, b>`` with ``b >= 0``: the square
    ``0 <= a, b <= s-1`` plus the triangle ``s <= a <= 2s-2``,
    ``0 <= b <= 2s-2-a``.  Row ``b`` therefore runs over ``0 <= a <= 2s-2-b``.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    top = 2 * s - 2
    flags = np.zeros(top * top + 1, dtype=bool)
    for b in range(s):
        a = np.arange(top - b + 1, dtype=np.int64)
        flags[a * a + a * b + b * b] = True
    flags[0] = False
    return int(flags.sum())


def distinct_distances_square(s: int) -> int:
    """Distinct values a^2 + b^2 over 0 <= b <= a <= s-1, excluding zero."""
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    flags = np.zeros(2 * (s - 1) ** 2 + 1, dtype=bool)
    a = np.arange(s, dtype=np.int64)
    for b in range(s):
        flags[a[b:] ** 2 + b * b] = True
    flags[0] = False
    return int(flags.sum())


def disk_distance_overestimate(lattice: Lattice, max_sq_radius: float,
                               sieve: RepresentabilitySieve | None = None,
                               include_zero: bool = False) -> int:
    """Number of integers ``1 <= j <= floor(4R)`` represented by the lattice form.

    Every distance in the disk of squared radius R is at most its diameter,
    so this bounds the distinct-distance count from above.  ``include_zero``
    adds one for ``j = 0``, matching how the published disk tables count.
    """
    if not max_sq_radius > 0:
        raise ValueError(f"squared radius must be positive, got {max_sq_radius}")
    limit = math.floor(4 * max_sq_radius)
    if limit > SIEVE_LIMIT:
        raise ResourceGuardError(f"4R = {limit} exceeds the sieve guard {SIEVE_LIMIT}")
    form = Form.for_lattice(lattice)
    if sieve is None or sieve.form is not form or sieve.limit < limit:
        sieve = build_sieve(form, max(limit, 1))
    return count_representable(sieve, limit) + (1 if include_zero else 0)


def polygon_distance_count(p: SymbolicPolygon) -> int:
    """Distances of R_n, or of R_n plus its center.

    The vertices give floor(n/2) chord lengths.  The center adds the radius,
    which is already a chord exactly when the polygon has a side equal to the
    circumradius, i.e. when 6 divides n.
    """
    if not p.with_center:
        return p.n // 2
    if p.n % 6 == 0:
        return p.n // 2
    return p.n // 2 + 1
