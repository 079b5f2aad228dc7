"""Exact distinct-distance computations for triangular and square lattice configurations."""

from .bounds import (CoverageReport, WitnessPair, central_hex_number, classify_polygon_optimality,
                     covered_range, lower_bound_g, theorem_coverage)
from .config import (Configuration, SymbolicPolygon, disk_sq_radius_for_points, hex_array,
                     polygon, sq_disk, square_array, tri_disk)
from .distances import (SquaredDistanceSet, disk_distance_overestimate, distinct_distances_exact,
                        distinct_distances_hex, distinct_distances_square, polygon_distance_count)
from .lattice import (Lattice, LatticeRangeError, ResourceGuardError, SqPoint, TriPoint,
                      embed_tri, sq_norm, tri_norm)
from .numtheory import (ConstantEstimate, Form, build_sieve, conjecture_constant,
                        count_representable, heuristic_ratio, landau_ramanujan,
                        loeschian_constant)
from .report import emit, table1, table2
from .search import SearchBudget, SearchResult, enumerate_disk_candidates, find_witness, greedy_prune

__version__ = "0.1.0"
