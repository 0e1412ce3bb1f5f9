"""Command-line surface: conversions, enumeration, census tables, duals and verification."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from akop import d_inverse, d_map
from counting import CARDINALITY_OF_I_MAX, CSV_HEADER, UDU_OF_D, census, formula_table
from dyck_core import enumerate_dyck, parse_dyck
from root_poset import dual, filter_from_antichain, parse_antichain, phi_min, sigma, sigma_inverse
from run_monitor import default_worker_count
from staircase_partitions import LPartition, enumerate_partitions, p_inverse, p_map, parse_partition
from suite_catalog import describe_suite
from verification import MAX_COMBINATORIAL_RANK, SUITES, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

REPRESENTATIONS = ("partition", "dyck", "dyck-akop", "antichain")


# ── Representation hub ────────────────────────────────────────────────────
# Every conversion goes through LPartition.

def _to_partition(kind: str, text: str, l: int) -> LPartition:
    if kind == "partition":
        return parse_partition(text, l)
    if kind == "dyck":
        return p_inverse(parse_dyck(text), l)
    if kind == "dyck-akop":
        return d_inverse(parse_dyck(text), l)
    return sigma(filter_from_antichain(parse_antichain(text), l))


def _render(kind: str, partition: LPartition, fmt: str) -> object:
    if kind == "partition":
        return partition.to_json() if fmt == "json" else str(partition)
    if kind == "antichain":
        ideal = sigma_inverse(partition)
        return ideal.to_json() if fmt == "json" else str(phi_min(ideal))
    path = p_map(partition) if kind == "dyck" else d_map(partition)
    return path.to_json() if fmt == "json" else str(path)


def _emit(value: object, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(value))
    else:
        print(value)


# ── Commands ──────────────────────────────────────────────────────────────

def cmd_map(args: argparse.Namespace) -> int:
    partition = _to_partition(args.source, args.input, args.l)
    _emit(_render(args.target, partition, args.format), args.format)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 1 <= args.l <= MAX_COMBINATORIAL_RANK:
        raise ValueError(f"--l must lie in 1..{MAX_COMBINATORIAL_RANK}, got {args.l}")
    if args.kind == "dyck":
        paths = enumerate_dyck(args.l + 1)
        values: List[object] = [p.to_json() if args.format == "json" else str(p) for p in paths]
    else:
        values = [_render(args.kind, lam, args.format) for lam in enumerate_partitions(args.l)]
    if args.format == "json":
        print(json.dumps(values))
    else:
        for value in values:
            print(value)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    if not 1 <= args.max_l <= MAX_COMBINATORIAL_RANK:
        raise ValueError(f"--max-l must lie in 1..{MAX_COMBINATORIAL_RANK}, got {args.max_l}")
    print(CSV_HEADER)
    status = EXIT_OK
    for l in range(1, args.max_l + 1):
        expected = formula_table(l)
        tables = [expected, census(l, UDU_OF_D), census(l, CARDINALITY_OF_I_MAX)]
        for table in tables:
            for row in table.csv_rows():
                print(row)
            if table.counts != expected.counts:
                logger.warning("rank %d: %s disagrees with the formula", l, table.source)
                status = EXIT_FAILED
    return status


def cmd_dual(args: argparse.Namespace) -> int:
    ideal = filter_from_antichain(parse_antichain(args.antichain), args.l)
    image = dual(ideal)
    _emit(image.to_json() if args.format == "json" else str(phi_min(image)), args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    threads = args.threads or default_worker_count()
    report = run_verification(
        max_l=args.max_l,
        lie_max_l=args.lie_max_l,
        threads=threads,
        suites=args.suite,
        involution=args.suite is None or args.involution,
    )
    for result in report.results:
        print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}  checked={result.checked}")
        if args.describe:
            print(f"      {describe_suite(result.name)}")
        if result.counterexample is not None:
            print(f"      counterexample: {json.dumps(result.counterexample, sort_keys=True)}")
    if report.involution:
        fixed = " ".join(f"l={l}:{hits}/{total}" for l, (hits, total) in report.involution.items())
        print(f"INFO  dual-involution  {fixed}")
    failed = sum(1 for result in report.results if not result.passed)
    print(f"{len(report.results)} suites, {failed} failed")
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "map": cmd_map,
    "enumerate": cmd_enumerate,
    "stats": cmd_stats,
    "dual": cmd_dual,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udu-ideals",
        description="Dyck paths, staircase partitions and ad-nilpotent ideals of sl(l+1).",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_map_cmd = sub.add_parser("map", help="convert between representations")
    p_map_cmd.add_argument("--l", type=int, required=True, help="rank l of sl(l+1)")
    p_map_cmd.add_argument("--from", dest="source", choices=REPRESENTATIONS, required=True)
    p_map_cmd.add_argument("--to", dest="target", choices=REPRESENTATIONS, required=True)
    p_map_cmd.add_argument("--input", required=True)
    p_map_cmd.add_argument("--format", choices=("text", "json"), default="text")

    p_enum = sub.add_parser("enumerate", help="list every object of a kind at rank l")
    p_enum.add_argument("--l", type=int, required=True)
    p_enum.add_argument("--kind", choices=REPRESENTATIONS, default="partition")
    p_enum.add_argument("--format", choices=("text", "json"), default="text")

    p_stats = sub.add_parser("stats", help="print N_r^l from the formula and both censuses as CSV")
    p_stats.add_argument("--max-l", type=int, default=5)

    p_dual = sub.add_parser("dual", help="antichain of the dual ideal")
    p_dual.add_argument("--l", type=int, required=True)
    p_dual.add_argument("--antichain", required=True, help='e.g. "1-3,2-5,5-7"; empty for the zero ideal')
    p_dual.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run the exhaustive invariant suites")
    p_verify.add_argument("--max-l", type=int, default=8)
    p_verify.add_argument("--lie-max-l", type=int, default=4)
    p_verify.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads, 0 picks the core count; threads share the GIL, so this overlaps suites without speeding them up",
    )
    p_verify.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only this suite (repeatable)")
    p_verify.add_argument("--describe", action="store_true", help="print a description under each suite")
    p_verify.add_argument(
        "--involution",
        action="store_true",
        help="also report dual . dual fixed points when --suite is given (always on for full runs)",
    )

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
