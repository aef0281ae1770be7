"""Command line interface.

Every run prints its primary result on stdout and exactly one JSON manifest
line on stderr (command, parameters, input/output digests, wall time).  Exit
codes: 0 success or property verified, 1 property violated (with the first
witness on stdout), 2 usage or input format errors.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import exponent_row
from .constructions import (
    choose_plane_order,
    lower_bound_family,
    projective_plane_incidence,
    validate_c2kfree_bipartite_regular,
)
from .counting import check_regular_matching_bound, count_perfect_matchings, permanent_ryser
from .formats import (
    FormatError,
    format_graph,
    format_matchings,
    format_paths,
    parse_graph,
    parse_matchings,
    parse_matrix,
    parse_paths,
)
from .graphs import is_creating, verify_pairwise_creating
from .reduction import (
    associated_triple,
    ground_set_reduce,
    pigeonhole_largest_class,
    strip_to_matchings,
    verify_fixed_edges_unused,
)
from .search import (
    enumerate_permutations,
    exact_h,
    exact_m,
    exact_rp,
    is_reversing,
    perm_to_matching,
)

CLAIM7_MAX_M = 6


def _read(path: str, inputs: list[str]) -> str:
    text = Path(path).read_text()
    inputs.append(path)
    return text


def _write(path: str, text: str, outputs: list[str]) -> None:
    Path(path).write_text(text)
    outputs.append(path)


def _require_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"--k must be at least 2, got {k}")


# ============================================================
# handlers
# ============================================================


def _cmd_construct_lower_bound(args, inputs, outputs) -> int:
    family = lower_bound_family(args.n, args.k)
    _write(args.out, format_paths(family), outputs)
    print(f"wrote {len(family)} paths on {args.n} vertices")
    return 0


def _cmd_construct_plane(args, inputs, outputs) -> int:
    if args.q is not None:
        q = args.q
    else:
        q, vertex_count = choose_plane_order(args.target_n)
        print(f"chose order {q} with {vertex_count} vertices")
    plane = projective_plane_incidence(q)
    _write(args.out, format_graph(plane.graph), outputs)
    print(f"wrote incidence graph of order {q} on {plane.graph.n} vertices")
    return 0


def _cmd_verify_creating(args, inputs, outputs) -> int:
    _require_k(args.k)
    text = _read(args.infile, inputs)
    family = parse_paths(text) if args.kind == "paths" else parse_matchings(text)
    report = verify_pairwise_creating(family, 2 * args.k, threads=args.threads)
    if report.passed:
        print(f"ok {report.family_size} members, {report.pair_count} pairs create length {2 * args.k}")
        return 0
    i, j = report.first_violation
    print(f"violation: members {i + 1} and {j + 1} do not create a cycle of length {2 * args.k}")
    return 1


def _cmd_verify_c2kfree(args, inputs, outputs) -> int:
    g = parse_graph(_read(args.infile, inputs))
    report = validate_c2kfree_bipartite_regular(g, args.k)
    if report.passed:
        print(f"ok bipartite {report.degree}-regular girth {report.girth}")
        return 0
    if not report.is_bipartite:
        print("violation: graph is not bipartite")
    elif not report.is_regular:
        print("violation: graph is not regular")
    else:
        print(f"violation: girth {report.girth} is not greater than {2 * args.k}")
    return 1


def _cmd_reduce_paths(args, inputs, outputs) -> int:
    _require_k(args.k)
    family = parse_paths(_read(args.infile, inputs))
    subfamily, _ = pigeonhole_largest_class(family, args.k)
    stripped = strip_to_matchings(subfamily, args.k)
    _write(args.out, format_matchings(stripped.matchings), outputs)
    print(
        f"kept {len(stripped.matchings)} of {len(family)} members "
        f"on {stripped.matchings[0].n} vertices"
    )
    return 0


def _cmd_reduce_shrink(args, inputs, outputs) -> int:
    family = parse_matchings(_read(args.infile, inputs))
    reduced = ground_set_reduce(family)
    _write(args.out, format_matchings(reduced.matchings), outputs)
    print(
        f"kept {len(reduced.matchings)} of {len(family)} members, "
        f"deleted pair {reduced.removed[0]}-{reduced.removed[1]}"
    )
    return 0


def _cmd_search(args, inputs, outputs) -> int:
    if args.target == "RP":
        if args.k is not None:
            raise ValueError("search RP takes no --k")
        value, _ = exact_rp(args.n)
    elif args.target == "H":
        if args.k is None:
            raise ValueError("search H needs --k, the exact cycle length")
        value, _ = exact_h(args.n, args.k)
    else:
        if args.k is None:
            raise ValueError("search M needs --k, the exact cycle length")
        value, _ = exact_m(args.n, args.k)
    print(value)
    return 0


def _cmd_count_matchings(args, inputs, outputs) -> int:
    g = parse_graph(_read(args.infile, inputs))
    print(count_perfect_matchings(g))
    return 0


def _cmd_count_permanent(args, inputs, outputs) -> int:
    matrix = parse_matrix(_read(args.infile, inputs))
    print(permanent_ryser(matrix))
    return 0


def _cmd_check_lemma6(args, inputs, outputs) -> int:
    g = parse_graph(_read(args.infile, inputs))
    report = check_regular_matching_bound(g)
    bound = f"{report.bound.numerator}/{report.bound.denominator}"
    if report.passed and report.doubly_stochastic:
        print(f"ok {report.count} matchings >= bound {bound}")
        return 0
    print(f"violation: {report.count} matchings < bound {bound}")
    return 1


def _cmd_check_claim4(args, inputs, outputs) -> int:
    _require_k(args.k)
    family = parse_paths(_read(args.infile, inputs))
    groups: dict = {}
    for index, path in enumerate(family):
        groups.setdefault(associated_triple(path, args.k), []).append(index)
    checked = 0
    for indices in groups.values():
        for i, j in itertools.combinations(indices, 2):
            if not verify_fixed_edges_unused(family[i], family[j], args.k):
                print(
                    f"violation: members {i + 1} and {j + 1} use a shared block edge "
                    f"in a cycle of length {2 * args.k}"
                )
                return 1
            checked += 1
    print(f"ok {checked} sharing pairs checked")
    return 0


def _cmd_check_claim7(args, inputs, outputs) -> int:
    if args.m > CLAIM7_MAX_M:
        raise ValueError(f"--m must be at most {CLAIM7_MAX_M}, got {args.m}")
    perms = enumerate_permutations(args.m)
    matchings = [perm_to_matching(p) for p in perms]
    checked = 0
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            if is_reversing(p, q) != is_creating(matchings[i], matchings[j], 4):
                print(f"violation: permutations {p.images} and {q.images}")
                return 1
            checked += 1
    print(f"ok {checked} ordered pairs checked")
    return 0


def _cmd_bounds(args, inputs, outputs) -> int:
    k_max = args.kmax if args.kmax is not None else args.k
    if k_max < args.k:
        raise ValueError(f"--kmax must be at least --k, got {k_max} < {args.k}")
    for k in range(args.k, k_max + 1):
        row = exponent_row(k)
        print(
            f"k={k} cycle={row.cycle_length}"
            f" lower={_rational(row.lower, args.decimal)}"
            f" matching_upper={_rational(row.matching_upper, args.decimal)}"
            f" path_upper={_rational(row.path_upper, args.decimal)}"
        )
    return 0


def _rational(value: Fraction, decimal: bool) -> str:
    if decimal:
        return f"{float(value):.6f}"
    return f"{value.numerator}/{value.denominator}"


# ============================================================
# parser and entry point
# ============================================================


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecreate",
        description="Exact toolkit for families of paths and matchings whose "
        "pairwise unions create fixed-length cycles.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for pairwise verification; results are identical for every value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="write deterministic families and graphs")
    construct_sub = construct.add_subparsers(dest="subcommand", required=True)
    lower = construct_sub.add_parser(
        "lower-bound", help="slot-permuted path family of size ((n-1)/k)!"
    )
    lower.add_argument("--n", type=int, required=True, help="vertex count, congruent to 1 mod k")
    lower.add_argument("--k", type=int, required=True, help="half the created cycle length")
    lower.add_argument("--out", required=True, help="output paths file")
    lower.set_defaults(handler=_cmd_construct_lower_bound, command_path="construct lower-bound")
    plane = construct_sub.add_parser(
        "plane", help="projective plane incidence graph of prime order"
    )
    group = plane.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", type=int, help="plane order (prime)")
    group.add_argument(
        "--target-n", type=int, dest="target_n", help="pick the largest order fitting this many vertices"
    )
    plane.add_argument("--out", required=True, help="output graph file")
    plane.set_defaults(handler=_cmd_construct_plane, command_path="construct plane")

    verify = sub.add_parser("verify", help="check families and graphs")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True)
    creating = verify_sub.add_parser("creating", help="all pairs create a cycle of length 2k")
    creating.add_argument("--k", type=int, required=True, help="half the created cycle length")
    creating.add_argument("--kind", choices=("paths", "matchings"), required=True)
    creating.add_argument("--in", dest="infile", required=True, help="input family file")
    creating.set_defaults(handler=_cmd_verify_creating, command_path="verify creating")
    c2kfree = verify_sub.add_parser(
        "c2kfree", help="bipartite, regular, and free of cycles up to length 2k"
    )
    c2kfree.add_argument("--k", type=int, required=True, help="half the forbidden cycle length")
    c2kfree.add_argument("--in", dest="infile", required=True, help="input graph file")
    c2kfree.set_defaults(handler=_cmd_verify_c2kfree, command_path="verify c2kfree")

    reduce_cmd = sub.add_parser("reduce", help="shrink families while keeping the pairwise property")
    reduce_sub = reduce_cmd.add_subparsers(dest="subcommand", required=True)
    paths_to = reduce_sub.add_parser(
        "paths-to-matchings", help="strip a path family sharing blocks down to matchings"
    )
    paths_to.add_argument("--k", type=int, required=True, help="half the created cycle length")
    paths_to.add_argument("--in", dest="infile", required=True, help="input paths file")
    paths_to.add_argument("--out", required=True, help="output matchings file")
    paths_to.set_defaults(handler=_cmd_reduce_paths, command_path="reduce paths-to-matchings")
    shrink = reduce_sub.add_parser("shrink", help="delete vertex 1 and its most common partner")
    shrink.add_argument("--in", dest="infile", required=True, help="input matchings file")
    shrink.add_argument("--out", required=True, help="output matchings file")
    shrink.set_defaults(handler=_cmd_reduce_shrink, command_path="reduce shrink")

    search = sub.add_parser("search", help="exact extremal family sizes by clique search")
    search.add_argument("target", choices=("H", "M", "RP"), help="paths, matchings, or permutations")
    search.add_argument("--n", type=int, required=True, help="ground set size")
    search.add_argument("--k", type=int, help="exact cycle length for H and M")
    search.set_defaults(handler=_cmd_search, command_path="search")

    count = sub.add_parser("count", help="exact counts")
    count_sub = count.add_subparsers(dest="subcommand", required=True)
    matchings_cmd = count_sub.add_parser("matchings", help="perfect matchings of a bipartite graph")
    matchings_cmd.add_argument("--in", dest="infile", required=True, help="input graph file")
    matchings_cmd.set_defaults(handler=_cmd_count_matchings, command_path="count matchings")
    permanent_cmd = count_sub.add_parser("permanent", help="permanent of an integer matrix")
    permanent_cmd.add_argument("--in", dest="infile", required=True, help="input matrix file")
    permanent_cmd.set_defaults(handler=_cmd_count_permanent, command_path="count permanent")

    check = sub.add_parser("check", help="verify the structural facts behind the pipeline")
    check_sub = check.add_subparsers(dest="subcommand", required=True)
    lemma6 = check_sub.add_parser(
        "lemma6", help="matching count of a regular bipartite graph meets r^m * m!/m^m"
    )
    lemma6.add_argument("--in", dest="infile", required=True, help="input graph file")
    lemma6.set_defaults(handler=_cmd_check_lemma6, command_path="check lemma6")
    claim4 = check_sub.add_parser(
        "claim4", help="cycles of length 2k between triple-sharing paths avoid the shared blocks"
    )
    claim4.add_argument("--k", type=int, required=True, help="half the created cycle length")
    claim4.add_argument("--in", dest="infile", required=True, help="input paths file")
    claim4.set_defaults(handler=_cmd_check_claim4, command_path="check claim4")
    claim7 = check_sub.add_parser(
        "claim7", help="reversing permutations match 4-cycle creating matchings"
    )
    claim7.add_argument("--m", type=int, required=True, help="permutation size (at most 6)")
    claim7.set_defaults(handler=_cmd_check_claim7, command_path="check claim7")

    bounds_cmd = sub.add_parser("bounds", help="exact rational growth exponents")
    bounds_cmd.add_argument("--k", type=int, required=True, help="half the cycle length")
    bounds_cmd.add_argument("--kmax", type=int, help="print rows for k..kmax")
    bounds_cmd.add_argument("--decimal", action="store_true", help="print decimal approximations")
    bounds_cmd.set_defaults(handler=_cmd_bounds, command_path="bounds")

    return parser


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


_SKIP_PARAMS = frozenset({"handler", "command_path", "command", "subcommand"})


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    inputs: list[str] = []
    outputs: list[str] = []
    try:
        if args.threads < 1:
            raise ValueError(f"--threads must be at least 1, got {args.threads}")
        code = args.handler(args, inputs, outputs)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    manifest = {
        "command": args.command_path,
        "parameters": {
            key: value
            for key, value in sorted(vars(args).items())
            if key not in _SKIP_PARAMS and value is not None
        },
        "inputs": {path: _digest(path) for path in inputs},
        "outputs": {path: _digest(path) for path in outputs if Path(path).exists()},
        "exit_code": code,
        "wall_time_s": round(time.monotonic() - start, 6),
        "version": __version__,
    }
    print(json.dumps(manifest, sort_keys=True), file=sys.stderr)
    return code
