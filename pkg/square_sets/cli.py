"""Command-line front end: ``python -m square_sets <command> ...``.

Exit codes: 0 success or complete, 1 verification incomplete, 2 usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from . import graphs, prob
from .errors import InvariantViolation, SquareSetError
from .fixtures import load_fixtures
from .models import QuarticCoeffs
from .quartic import joint_square_points, lagrange_identity, quartic_square_points, verify_published_sets
from .results import ResultRecord, TripleReport
from .search import (
    SearchConfig,
    extend_set,
    near_solution_scan,
    search_n4,
    search_n5,
    search_triples_positive,
    solve_three,
)
from .sets import pairs_to_triples, parse_set, verify_pairs, verify_triples
from .utils import ensure_choice, parse_index_pair, parse_int_list

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("tsv", "jsonl")
# Flags whose values may start with "-" (negative set elements).
VALUE_FLAGS = ("--set", "--args", "--coeffs", "--second", "--anchor")
EXIT_OK = 0
EXIT_INCOMPLETE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class ResultWriter:
    """Single writer for all records of one run."""

    def __init__(self, stream: TextIO, fmt: str) -> None:
        self.stream = stream
        self.format = ensure_choice(fmt, OUTPUT_FORMATS, label="format")

    def emit(self, record: ResultRecord) -> None:
        line = record.to_json() if self.format == "jsonl" else record.to_tsv()
        self.stream.write(line + "\n")


def _triple_record(report: TripleReport, *, kind: str = "report", meta: Dict[str, str] | None = None) -> ResultRecord:
    s = report.set
    return ResultRecord(
        kind=kind,
        n=s.n,
        elements=list(s.elements),
        sum=s.total,
        l1=s.l1,
        square_pairs=report.square_triples,
        total_pairs=report.total_triples,
        meta={"check": "triples", **(meta or {})},
    )


def _join_value_flags(argv: Sequence[str]) -> List[str]:
    """Rewrite `--set -2,3,6` as `--set=-2,3,6` so argparse does not read a flag."""
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if token in VALUE_FLAGS and index + 1 < len(argv):
            joined.append(f"{token}={argv[index + 1]}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def _default_threads() -> int:
    raw = os.environ.get("SQUARE_SETS_THREADS", "1")
    try:
        return int(raw)
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace, out: ResultWriter) -> int:
    s = parse_set(args.set)
    if args.triples:
        report = verify_triples(s)
        out.emit(_triple_record(report))
        return EXIT_OK if report.complete else EXIT_INCOMPLETE
    pair_report = verify_pairs(s)
    out.emit(ResultRecord.from_pair_report(pair_report, kind="report"))
    return EXIT_OK if pair_report.complete else EXIT_INCOMPLETE


def _cmd_search3(args: argparse.Namespace, out: ResultWriter) -> int:
    s = solve_three(args.p, args.q, args.r)
    out.emit(ResultRecord.from_pair_report(verify_pairs(s)))
    return EXIT_OK


def _search_config(args: argparse.Namespace, *, checkpoint: bool) -> SearchConfig:
    return SearchConfig(
        s_min=args.smin,
        s_max=args.smax,
        positive_only=args.positive,
        top_k=args.top,
        workers=args.threads,
        checkpoint=Path(args.checkpoint) if checkpoint and args.checkpoint else None,
    )


def _cmd_search4(args: argparse.Namespace, out: ResultWriter) -> int:
    for s in search_n4(_search_config(args, checkpoint=True)):
        out.emit(ResultRecord.from_pair_report(verify_pairs(s)))
    return EXIT_OK


def _cmd_search5(args: argparse.Namespace, out: ResultWriter) -> int:
    for s in search_n5(_search_config(args, checkpoint=True)):
        out.emit(ResultRecord.from_pair_report(verify_pairs(s)))
    return EXIT_OK


def _cmd_triples_search(args: argparse.Namespace, out: ResultWriter) -> int:
    for z in search_triples_positive(_search_config(args, checkpoint=False)):
        out.emit(_triple_record(verify_triples(z), kind="set"))
    return EXIT_OK


def _cmd_transform(args: argparse.Namespace, out: ResultWriter) -> int:
    z = pairs_to_triples(parse_set(args.set))
    out.emit(_triple_record(verify_triples(z)))
    return EXIT_OK


def _cmd_extend(args: argparse.Namespace, out: ResultWriter) -> int:
    s = parse_set(args.set)
    if args.all_anchors:
        target = args.require_pairs if args.require_pairs is not None else (s.n + 1) * s.n // 2
        candidates = near_solution_scan([s], target, workers=args.threads)
    else:
        i, j = parse_index_pair(args.anchor)
        cfg = SearchConfig(anchor=(i - 1, j - 1), require_pairs=args.require_pairs)
        candidates = extend_set(s, cfg)
    for candidate in candidates:
        meta = {
            "new": str(candidate.new_element),
            "anchor": f"{candidate.anchor[0] + 1},{candidate.anchor[1] + 1}",
            "w": str(candidate.w),
            "y": str(candidate.y),
        }
        out.emit(ResultRecord.from_pair_report(candidate.report, kind="candidate", meta=meta))
    return EXIT_OK


def _cmd_quartic(args: argparse.Namespace, out: ResultWriter) -> int:
    first = QuarticCoeffs.parse(args.coeffs)
    if args.second:
        second = QuarticCoeffs.parse(args.second)
        for point, root in joint_square_points(first, second, args.bound, workers=args.threads):
            meta = {"g": str(point.g), "h": str(point.h), "f": str(point.f_root), "f2": str(root)}
            out.emit(ResultRecord(kind="report", meta=meta))
        return EXIT_OK
    for point in quartic_square_points(first, args.bound, workers=args.threads):
        out.emit(ResultRecord(kind="report", meta={"g": str(point.g), "h": str(point.h), "f": str(point.f_root)}))
    return EXIT_OK


def _cmd_identity(args: argparse.Namespace, out: ResultWriter) -> int:
    values = parse_int_list(args.args, label="identity argument")
    if len(values) != 4:
        raise SquareSetError(f"identity needs four values 't,u,v,w', got {args.args!r}.")
    s, parts = lagrange_identity(*values)
    out.emit(ResultRecord(kind="report", meta={"s": str(s), "parts": ",".join(str(p) for p in parts)}))
    return EXIT_OK


def _cmd_prob(args: argparse.Namespace, out: ResultWriter) -> int:
    meta = {
        "closed_form": repr(prob.closed_form()),
        "cube_sphere_volume": repr(prob.cube_sphere_volume()),
    }
    out.emit(ResultRecord(kind="prob", meta=meta))
    if args.mc:
        estimators = (
            ("ordered", prob.monte_carlo),
            ("unordered", prob.monte_carlo_unordered),
            ("volume", prob.monte_carlo_volume),
        )
        for name, estimator in estimators:
            estimate = estimator(args.mc, args.seed, workers=args.threads)
            meta = {
                "estimator": name,
                "value": repr(estimate.value),
                "std_error": repr(estimate.std_error),
                "samples": str(estimate.samples),
                "seed": str(args.seed),
            }
            out.emit(ResultRecord(kind="prob", meta=meta))
    return EXIT_OK


def _cmd_fixtures(args: argparse.Namespace, out: ResultWriter) -> int:
    book = load_fixtures(Path(args.file) if args.file else None)
    logger.info("Loaded %s", book.summary())
    checks = verify_published_sets(book)
    for check in checks:
        meta = {
            "expect": str(check.fixture.expect),
            "passed": "yes" if check.passed else "no",
            "sum_square": "yes" if check.sum_is_square else "no",
            "core": check.core.to_literal() if check.core is not None else "",
        }
        out.emit(ResultRecord.from_pair_report(check.report, kind="report", meta=meta))
    return EXIT_OK if all(check.passed for check in checks) else EXIT_INCOMPLETE


def _cmd_graph(args: argparse.Namespace, out: ResultWriter) -> int:
    s = parse_set(args.set)
    rendered = graphs.render_pair_graph(s, Path(args.output))
    if rendered is None:
        logger.warning("graphviz is not installed; no image written")
    meta = {"output": str(rendered) if rendered else ""}
    core = graphs.largest_square_subset(s)
    if core is not None:
        meta["core"] = core.to_literal()
    out.emit(ResultRecord.from_pair_report(verify_pairs(s), kind="report", meta=meta))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="tsv")
    common.add_argument("--checkpoint", default=None, help="progress file for search4/search5")
    common.add_argument("--threads", type=int, default=_default_threads(), help="0 = one per CPU")
    common.add_argument("--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    parser = argparse.ArgumentParser(
        prog="square_sets", description="Search and verify sets with square pair sums."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace, ResultWriter], int], help_text: str):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.set_defaults(handler=handler)
        return command

    verify = add("verify", _cmd_verify, "verify pair (or triple) sums of a set")
    verify.add_argument("--set", required=True)
    verify.add_argument("--triples", action="store_true")

    search3 = add("search3", _cmd_search3, "three elements from three squares")
    search3.add_argument("--p", type=int, required=True)
    search3.add_argument("--q", type=int, required=True)
    search3.add_argument("--r", type=int, required=True)

    for name, handler, help_text in (
        ("search4", _cmd_search4, "smallest 4-element sets"),
        ("search5", _cmd_search5, "smallest 5-element sets"),
        ("triples-search", _cmd_triples_search, "smallest positive square-triple sets"),
    ):
        command = add(name, handler, help_text)
        command.add_argument("--smax", type=int, required=True)
        command.add_argument("--smin", type=int, default=1)
        command.add_argument("--positive", action="store_true")
        command.add_argument("--top", type=int, default=5)

    transform = add("transform", _cmd_transform, "pair-square 5-set to triple-square 5-set")
    transform.add_argument("--set", required=True)

    extend = add("extend", _cmd_extend, "add one element by the divisor method")
    extend.add_argument("--set", required=True)
    extend.add_argument("--require-pairs", type=int, default=None)
    anchors = extend.add_mutually_exclusive_group()
    anchors.add_argument("--anchor", default="1,2", help="1-based indices i,j")
    anchors.add_argument("--all-anchors", action="store_true")

    quartic = add("quartic", _cmd_quartic, "square values of a binary quartic")
    quartic.add_argument("--coeffs", required=True, help="a,b,c")
    quartic.add_argument("--bound", type=int, required=True)
    quartic.add_argument("--second", default=None, help="a,b,c of a second quartic")

    identity = add("identity", _cmd_identity, "four-square identity")
    identity.add_argument("--args", required=True, help="t,u,v,w")

    probability = add("prob", _cmd_prob, "rarity of positive square triples")
    probability.add_argument("--mc", type=int, default=0, help="Monte Carlo samples")
    probability.add_argument("--seed", type=int, default=0)

    fixtures = add("fixtures", _cmd_fixtures, "verify the published record sets")
    fixtures.add_argument("--file", default=None)

    graph = add("graph", _cmd_graph, "render the square-pair graph of a set")
    graph.add_argument("--set", required=True)
    graph.add_argument("--output", default="pairs.svg")

    return parser


def run(argv: Optional[Sequence[str]] = None, *, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_join_value_flags(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    writer = ResultWriter(stdout, args.format)
    try:
        return args.handler(args, writer)
    except InvariantViolation as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_INVARIANT
    except SquareSetError as exc:
        token = getattr(exc, "token", None)
        suffix = f" (token: {token!r})" if token is not None else ""
        stderr.write(f"error: {exc}{suffix}\n")
        return EXIT_USAGE
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:  # pragma: no cover - CLI entry point
    sys.exit(run())
