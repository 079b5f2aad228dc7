"""Command line interface: ``latdist <command> [options]``."""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import bounds, config, distances, numtheory, report, search
from .lattice import ResourceGuardError

EXIT_OK, EXIT_NOT_MET, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    fam = args.family
    if fam in ("hex", "square"):
        if args.s is None:
            raise UsageError(f"--family {fam} needs --s")
        c = config.hex_array(args.s) if fam == "hex" else config.square_array(args.s)
    else:
        if args.sq_radius is None:
            raise UsageError(f"--family {fam} needs --sq-radius")
        c = config.tri_disk(args.sq_radius) if fam == "tri-disk" else config.sq_disk(args.sq_radius)
    _write(config.format_configuration(c, [f"n={len(c)}"]), args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    c = config.read_configuration(args.input)
    d = distances.distinct_distances_exact(c, allow_large=args.allow_large,
                                           method=args.method, threads=args.threads)
    print(f"n={len(c)}")
    print(f"k={len(d)}")
    if args.list:
        print("squared_distances=" + ",".join(map(str, d.values)))
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = report.table1(args.hex_max, args.sq_max)
    _write(report.emit(rows, args.format), args.out)
    return EXIT_OK


def cmd_table2(args) -> int:
    rows = report.table2(args.rows, exact_disks=args.exact_disks, threads=args.threads)
    _write(report.emit(rows, args.format), args.out)
    return EXIT_OK


def cmd_constants(args) -> int:
    pb = args.prime_bound
    c = numtheory.landau_ramanujan(pb).value
    cp = numtheory.loeschian_constant(pb).value
    print(f"prime_bound={pb}")
    print(f"c={c:.9f}")
    print(f"c_prime={cp:.9f}")
    print(f"c_prime_over_c={cp / c:.9f}")
    print(f"ratio={numtheory.ratio_from(c, cp):.9f}")
    print(f"conjecture={numtheory.conjecture_constant(pb).value:.9f}")
    return EXIT_OK


def _describe(result: search.SearchResult) -> str:
    return (f"search k<={result.k_target} n>={result.n_min}: "
            f"target_met={str(result.target_met).lower()} "
            f"k={result.k_achieved} n={result.n_achieved} "
            f"strategy={result.strategy} [{result.best.label}]")


def cmd_verify(args) -> int:
    if args.witnesses:
        witnesses = bounds.read_witnesses(args.witnesses)
    else:
        witnesses = bounds.baseline_witnesses()
    cover = bounds.theorem_coverage(witnesses)
    if args.search_missing and cover.gaps:
        deadline = time.monotonic() + args.budget_seconds
        targets = list(bounds.GAP_TARGETS)
        while True:
            remaining = deadline - time.monotonic()
            if remaining <= 0 or not cover.gaps:
                break
            if targets:
                k, n = targets.pop(0)
            else:
                # aim at the smallest open gap directly
                k = cover.gaps[0]
                n = 2 * k + 2
            result = search.find_witness(k, n, search.SearchBudget(max_seconds=remaining))
            print(_describe(result))
            if not result.target_met and not targets:
                break
            if result.target_met:
                found = bounds.witness_from_configuration(result.best, result.best.label)
                witnesses = [*witnesses, found]
                cover = bounds.theorem_coverage(witnesses)
    print(cover.format())
    return EXIT_OK if cover.complete else EXIT_NOT_MET


def cmd_search(args) -> int:
    budget = search.SearchBudget(max_seconds=args.budget_seconds, seed=args.seed)
    result = search.find_witness(args.k, args.n_min, budget)
    print(_describe(result))
    if args.out:
        _write(result.to_text(), args.out)
    return EXIT_OK if result.target_met else EXIT_NOT_MET


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="latdist", description="Distinct distances in lattice configurations.")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="cap on worker threads (output does not depend on it)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a configuration file")
    g.add_argument("--family", required=True, choices=["hex", "square", "tri-disk", "sq-disk"])
    g.add_argument("--s", type=int)
    g.add_argument("--sq-radius", type=float)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("count", help="count distinct distances of a configuration file")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--list", action="store_true", help="also print the squared distances")
    c.add_argument("--method", choices=["auto", "pairwise", "fft"], default="auto")
    c.add_argument("--allow-large", action="store_true",
                   help=f"lift the {distances.MAX_EXACT_POINTS}-point guard")
    c.set_defaults(func=cmd_count)

    t1 = sub.add_parser("table1", help="hexagon and square array table")
    t1.add_argument("--hex-max", type=int, default=report.HEX_S_MAX)
    t1.add_argument("--sq-max", type=int, default=report.SQUARE_S_MAX)
    t1.add_argument("--format", choices=["csv", "markdown"], default="csv")
    t1.add_argument("--out")
    t1.set_defaults(func=cmd_table1)

    t2 = sub.add_parser("table2", help="hexagons, squares and disks of matching size")
    t2.add_argument("--rows", type=int, default=report.TABLE2_ROWS)
    t2.add_argument("--format", choices=["csv", "markdown"], default="csv")
    t2.add_argument("--exact-disks", action="store_true",
                    help="count disk distances exactly instead of the sieve estimate")
    t2.add_argument("--out")
    t2.set_defaults(func=cmd_table2)

    k = sub.add_parser("constants", help="density constants from truncated Euler products")
    k.add_argument("--prime-bound", type=int, default=numtheory.DEFAULT_PRIME_BOUND)
    k.set_defaults(func=cmd_constants)

    v = sub.add_parser("verify-theorem", help="witness coverage of g(k) > 2k+1 for 7 <= k <= 62")
    v.add_argument("--witnesses", help="file of 'k n source' lines (default: built-in list)")
    v.add_argument("--search-missing", action="store_true")
    v.add_argument("--budget-seconds", type=int, default=600)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search for a witness configuration")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--budget-seconds", type=int, default=600)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"error: resource: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
