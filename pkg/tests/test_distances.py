import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from latdist.config import (Configuration, SymbolicPolygon, hex_array, lattice_disk,
                            sq_disk, square_array, tri_disk)
from latdist.distances import (MAX_EXACT_POINTS, disk_distance_overestimate,
                               distinct_distances_exact, distinct_distances_hex,
                               distinct_distances_square, polygon_distance_count)
from latdist.lattice import Lattice, ResourceGuardError
from latdist.numtheory import Form, build_sieve


def brute_k(config):
    """Reference count over all ordered pairs with plain Python ints."""
    pts = list(config)
    norm = config.lattice.norm
    return len({norm(p[0] - q[0], p[1] - q[1]) for p in pts for q in pts if p != q})


def test_five_by_five_grid_list():
    d = distinct_distances_exact(square_array(5))
    assert d.values == (1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20, 25, 32)
    assert d.k == 14 and 13 in d and 3 not in d


def test_small_cases():
    assert len(distinct_distances_exact(hex_array(2))) == 3
    two = Configuration.from_points(Lattice.TRIANGULAR, [(0, 0), (1, 0)])
    assert distinct_distances_exact(two).values == (1,)
    with pytest.raises(ValueError):
        distinct_distances_exact(hex_array(1))


@pytest.mark.parametrize("s,k", [(2, 3), (5, 23), (8, 59), (14, 172), (23, 440)])
def test_hex_counts(s, k):
    assert distinct_distances_hex(s) == k


@pytest.mark.parametrize("s,k", [(2, 2), (5, 14), (21, 197), (39, 623)])
def test_square_counts(s, k):
    assert distinct_distances_square(s) == k


@pytest.mark.parametrize("s", range(2, 13))
def test_hex_reduction_matches_brute_force(s):
    assert distinct_distances_hex(s) == brute_k(hex_array(s))
    assert distinct_distances_hex(s) == len(distinct_distances_exact(hex_array(s)))


def test_square_reduction_matches_full_count():
    for s in range(2, 41):
        assert distinct_distances_square(s) == len(distinct_distances_exact(square_array(s)))


def test_hex_distance_bound():
    for s in range(2, 101):
        assert distinct_distances_hex(s) <= s * s - 1


def test_domain_errors():
    for fn in (distinct_distances_hex, distinct_distances_square):
        with pytest.raises(ValueError):
            fn(1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(Lattice)),
       st.lists(st.tuples(st.integers(-12, 12), st.integers(-12, 12)), min_size=2, max_size=40,
                unique=True),
       st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_translation_invariance_and_oracle(lattice, pts, da, db):
    c = Configuration.from_points(lattice, pts)
    d = distinct_distances_exact(c)
    assert len(d) == brute_k(c)
    assert distinct_distances_exact(c.translated(da, db)) == d


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(Lattice)),
       st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)), min_size=2, max_size=80,
                unique=True))
def test_fft_route_matches_pairwise(lattice, pts):
    c = Configuration.from_points(lattice, pts)
    assert (distinct_distances_exact(c, method="fft")
            == distinct_distances_exact(c, method="pairwise"))


def test_fft_on_large_hexagon():
    c = hex_array(40)
    assert (distinct_distances_exact(c, method="fft")
            == distinct_distances_exact(c, method="pairwise"))
    assert len(distinct_distances_exact(c)) == distinct_distances_hex(40)


def test_thread_count_does_not_change_result():
    c = tri_disk(300)
    assert (distinct_distances_exact(c, method="pairwise", threads=1)
            == distinct_distances_exact(c, method="pairwise", threads=4))


def test_unknown_method():
    with pytest.raises(ValueError):
        distinct_distances_exact(hex_array(3), method="magic")


def test_point_guard():
    n = MAX_EXACT_POINTS + 1
    c = Configuration.from_points(Lattice.SQUARE, np.stack([np.arange(n), np.zeros(n)], axis=1))
    with pytest.raises(ResourceGuardError):
        distinct_distances_exact(c)


def _sandwich_radii():
    rng = np.random.default_rng(7)
    return sorted(set([0.5, 1, 2, 3, 12, 13, 100, 418.74, 1999.9]
                      + rng.uniform(0.3, 2000, 40).round(2).tolist()))


@pytest.mark.parametrize("lattice", list(Lattice))
def test_overestimate_sandwich(lattice):
    sieve = build_sieve(Form.for_lattice(lattice), 8000)
    for R in _sandwich_radii():
        disk = lattice_disk(lattice, R)
        if len(disk) < 2:
            continue
        exact = len(distinct_distances_exact(disk))
        over = disk_distance_overestimate(lattice, R, sieve)
        assert 0 <= over - exact < 4 * math.sqrt(R), (lattice, R)


def test_overestimate_values():
    assert disk_distance_overestimate(Lattice.TRIANGULAR, 418.734296) == 440
    assert disk_distance_overestimate(Lattice.TRIANGULAR, 418.734296, include_zero=True) == 441
    assert disk_distance_overestimate(Lattice.SQUARE, 483.512717) == 600
    assert disk_distance_overestimate(Lattice.SQUARE, 483.512717, include_zero=True) == 601
    # floor(4 * 0.5) = 2 and both 1 and 2 are sums of two squares
    assert disk_distance_overestimate(Lattice.SQUARE, 0.5) == 2
    assert disk_distance_overestimate(Lattice.TRIANGULAR, 0.25) == 1
    with pytest.raises(ValueError):
        disk_distance_overestimate(Lattice.SQUARE, 0)
    with pytest.raises(ResourceGuardError):
        disk_distance_overestimate(Lattice.SQUARE, 3e7)


def test_overestimate_reuses_or_rebuilds_sieve():
    small = build_sieve(Form.LOESCHIAN, 10)
    wrong = build_sieve(Form.TWO_SQUARES, 5000)
    for s in (small, wrong, None):
        assert disk_distance_overestimate(Lattice.TRIANGULAR, 1000, s) == \
            disk_distance_overestimate(Lattice.TRIANGULAR, 1000)


def test_exact_disk_counts_against_estimate():
    disk = sq_disk(50)
    assert len(distinct_distances_exact(disk)) <= disk_distance_overestimate(Lattice.SQUARE, 50)


@pytest.mark.parametrize("n,center,k", [(7, False, 3), (12, True, 6), (5, True, 3),
                                        (6, True, 3), (3, False, 1), (4, True, 3)])
def test_polygon_counts(n, center, k):
    assert polygon_distance_count(SymbolicPolygon(n, center)) == k


def test_polygon_counts_against_geometry():
    for n in range(3, 40):
        pts = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]
        for center in (False, True):
            cloud = pts + [(0.0, 0.0)] if center else pts
            ds = sorted(math.dist(p, q) for i, p in enumerate(cloud) for q in cloud[i + 1:])
            distinct = 1 + sum(1 for x, y in zip(ds, ds[1:]) if y - x > 1e-9)
            assert polygon_distance_count(SymbolicPolygon(n, center)) == distinct


def test_polygon_counts_monotone_in_n():
    seq = [polygon_distance_count(SymbolicPolygon(n)) for n in range(3, 60, 2)]
    assert all(a < b for a, b in zip(seq, seq[1:]))
