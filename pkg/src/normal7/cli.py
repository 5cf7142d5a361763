"""Command line: color one graph, search exact values, sweep a census file,
or run the exhaustive certificates.

Exit codes: 0 success, 2 bad input, 3 inconclusive within budget, 4 internal
verification failure.  Graphs are read as graph6 (one line, no spaces) or as
an edge list ("n m" header, then one "u v" pair per line), from a file or
from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Dict, Iterable, Iterator, List, Optional

from normal7.certify import CLAIMS, run_claim
from normal7.coloring_solver import EdgeColoring, exact_chi_n, is_normal
from normal7.cuts_reductions import find_bridges
from normal7.graph_core import (
    Graph6Error,
    PseudoGraph,
    parse_edge_list,
    parse_graph6,
    write_dot,
    write_graph6,
)
from normal7.normal7_pipeline import (
    CertificateStep,
    PipelineVerificationError,
    normal7_coloring,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3
EXIT_VERIFY = 4


class InputError(Exception):
    """The provided graph text cannot be used."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def parse_graph_text(text: str) -> PseudoGraph:
    """Accept either one graph6 line or an edge list with an "n m" header."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty input")
    if len(lines) == 1 and " " not in lines[0]:
        try:
            return parse_graph6(lines[0])
        except Graph6Error as exc:
            raise InputError(f"bad graph6 line: {exc}") from exc
    try:
        return parse_edge_list("\n".join(lines))
    except ValueError as exc:
        raise InputError(f"bad edge list: {exc}") from exc


def _require_simple_cubic(g: PseudoGraph) -> None:
    for v in g.vertices():
        if g.degree(v) != 3:
            raise InputError(
                f"input graph is not cubic: vertex {v} has degree {g.degree(v)}"
            )
    if not g.is_simple():
        raise InputError("input graph has a loop or parallel edges")


def _certificate_json(trace: List[CertificateStep]) -> List[Dict[str, object]]:
    return [
        {
            "case": step.tag.value,
            "fingerprint": step.fingerprint,
            "permutation": list(step.permutation),
        }
        for step in trace
    ]


def cmd_color(args: argparse.Namespace) -> int:
    try:
        g = parse_graph_text(_read_text(args.input))
        _require_simple_cubic(g)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    fmt = "dot" if args.dot else args.format
    if fmt == "g6":
        print(write_graph6(g))
        return EXIT_OK

    trace: List[CertificateStep] = []
    try:
        coloring = normal7_coloring(g, trace)
    except ValueError as exc:
        # the only in-domain refusal: a graph with no normal coloring at all
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PipelineVerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    if fmt == "dot":
        print(write_dot(g, coloring))
        return EXIT_OK

    ok, _ = is_normal(coloring)
    doc = {
        "n": g.num_vertices,
        "m": g.num_edges,
        "palette": coloring.k,
        "colors": {str(e): c for e, c in sorted(coloring.colors.items())},
        "colors_used": len(set(coloring.colors.values())),
        "statuses": {str(e): coloring.status_label(e) for e in g.edge_ids()},
        "verified": ok,
        "certificate": _certificate_json(trace),
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    try:
        g = parse_graph_text(_read_text(args.input))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    res = exact_chi_n(g, args.max_k, args.budget)
    doc: Dict[str, object] = {
        "n": g.num_vertices,
        "m": g.num_edges,
        "max_k": args.max_k,
        "nodes": res.nodes_explored,
    }
    if res.timed_out:
        doc["chi_n"] = None
        doc["inconclusive"] = True
        print(json.dumps(doc, indent=2))
        return EXIT_INCONCLUSIVE
    doc["chi_n"] = res.chi
    if res.chi is None:
        doc["exceeds"] = args.max_k
    else:
        assert res.witness is not None
        doc["witness"] = {str(e): c for e, c in sorted(res.witness.colors.items())}
    print(json.dumps(doc, indent=2))
    return EXIT_OK


@dataclass
class CensusRecord:
    graph6: str
    n: int
    bridges: int
    colors_used: int
    verified: bool
    exact_chi: Optional[int]
    solver_nodes: int
    elapsed_ms: float


def census_line(line: str, exact_up_to: int, budget: Optional[int]) -> Dict[str, object]:
    """One census record; any per-graph failure is reported, never raised."""
    start = time.perf_counter()
    try:
        g = parse_graph6(line)
        coloring = normal7_coloring(g)
        ok, _ = is_normal(coloring)
        exact_chi: Optional[int] = None
        solver_nodes = 0
        if exact_up_to and g.num_vertices <= exact_up_to:
            res = exact_chi_n(g, 7, budget)
            exact_chi = res.chi
            solver_nodes = res.nodes_explored
        record = CensusRecord(
            graph6=line,
            n=g.num_vertices,
            bridges=len(find_bridges(g)),
            colors_used=len(set(coloring.colors.values())),
            verified=ok,
            exact_chi=exact_chi,
            solver_nodes=solver_nodes,
            elapsed_ms=round((time.perf_counter() - start) * 1000.0, 3),
        )
        return asdict(record)
    except Exception as exc:  # isolate the line, keep the sweep going
        return {
            "graph6": line,
            "error": f"{type(exc).__name__}: {exc}",
            "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3),
        }


def _census_records(
    lines: List[str], jobs: int, exact_up_to: int, budget: Optional[int]
) -> Iterator[Dict[str, object]]:
    work = partial(census_line, exact_up_to=exact_up_to, budget=budget)
    if jobs <= 1:
        for line in lines:
            yield work(line)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map yields in input order, so output order is stable at any job count
        yield from pool.map(work, lines, chunksize=8)


def cmd_census(args: argparse.Namespace) -> int:
    try:
        text = _read_text(args.input)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]

    colors_hist: Dict[str, int] = {}
    exact_hist: Dict[str, int] = {}
    failures = 0
    for rec in _census_records(lines, args.jobs, args.exact_up_to, args.budget):
        print(json.dumps(rec, sort_keys=True))
        if "error" in rec:
            failures += 1
            continue
        used = str(rec["colors_used"])
        colors_hist[used] = colors_hist.get(used, 0) + 1
        if rec["exact_chi"] is not None:
            key = str(rec["exact_chi"])
            exact_hist[key] = exact_hist.get(key, 0) + 1
    summary = {
        "summary": True,
        "graphs": len(lines),
        "failures": failures,
        "colors_used_histogram": colors_hist,
        "exact_chi_histogram": exact_hist,
    }
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    claims = sorted(CLAIMS) if args.all else list(args.claims)
    if not claims:
        print("error: name at least one claim or pass --all", file=sys.stderr)
        return EXIT_INPUT
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        print(
            f"error: unknown claims {unknown}; known: {sorted(CLAIMS)}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    rc = EXIT_OK
    for claim in claims:
        cert = run_claim(claim)
        print(cert.to_record())
        if cert.verdict == "inconclusive":
            rc = max(rc, EXIT_INCONCLUSIVE)
        elif cert.verdict == "fails":
            rc = EXIT_VERIFY
    return rc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normal7",
        description="normal edge colorings of cubic graphs with at most seven colors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    color = sub.add_parser(
        "color", help="color one simple cubic graph and emit a replay certificate"
    )
    color.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    color.add_argument(
        "--format", choices=("json", "dot", "g6"), default="json",
        help="output format (g6 just echoes the parsed graph)",
    )
    color.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    color.set_defaults(func=cmd_color)

    exact = sub.add_parser(
        "exact", help="exact minimum palette size by exhaustive search"
    )
    exact.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    exact.add_argument("--max-k", type=int, default=7, help="largest palette to try")
    exact.add_argument(
        "--budget", type=int, default=None, help="search node budget per palette size"
    )
    exact.set_defaults(func=cmd_exact)

    census = sub.add_parser(
        "census", help="run the pipeline over a file of graph6 lines"
    )
    census.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    census.add_argument("--jobs", type=int, default=1, help="worker processes")
    census.add_argument(
        "--exact-up-to", type=int, default=0,
        help="also compute the exact value for graphs with at most this many vertices",
    )
    census.add_argument(
        "--budget", type=int, default=None, help="search node budget for exact runs"
    )
    census.set_defaults(func=cmd_census)

    certify = sub.add_parser("certify", help="run exhaustive certificates")
    certify.add_argument("claims", nargs="*", metavar="CLAIM", help=f"one of {sorted(CLAIMS)}")
    certify.add_argument("--all", action="store_true", help="run every claim")
    certify.set_defaults(func=cmd_certify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
