"""Command-line interface.

Subcommands: `mycielski` (write a family member), `build` (instance file ->
reduction graph file), `check` (triangle-free / coloring / snake on a graph
file), and `verify-all` (the full pipeline with a JSON report).

Exit codes: 0 = decided/pass, 2 = budget-exhausted/inconclusive, 1 = error or
a completed check contradicting the expected facts.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .budget import Budget
from .coloring import ColoringProblem, decide_coloring
from .corpus import DEFAULT_SEED
from .gadgets import parse_mnae, build_reduction
from .graphs import GraphError, is_triangle_free, read_graph_file, write_graph, write_graph_file
from .mycielski import build_mk
from .pipeline import (
    DEFAULT_BUDGET,
    render_report_lines,
    report_exit_code,
    verify_all,
)
from .snake import PathQuery, has_induced_path


def _budget_from_args(args) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _add_budget_flags(parser: argparse.ArgumentParser, default: Budget) -> None:
    parser.add_argument("--budget-nodes", type=int, default=default.max_nodes,
                        help="search-node limit per decision")
    parser.add_argument("--budget-seconds", type=float, default=default.max_seconds,
                        help="wall-time limit per decision, in seconds")


def _write_single_check_report(path: str, record: dict) -> None:
    report = {
        "tool": "gadgetcheck",
        "version": __version__,
        "schema_version": 1,
        "seed": DEFAULT_SEED,
        "threads": 1,
        "budget": record.pop("_budget"),
        "checks": [record],
        "verdict": {"pass": "pass", "fail": "fail", "inconclusive": "inconclusive"}[record["outcome"]],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def _cmd_mycielski(args) -> int:
    graph = build_mk(args.k)
    write_graph_file(graph, args.out)
    print(f"wrote {args.out}: {graph.n} vertices, {graph.m} edges")
    return 0


def _cmd_build(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        inst = parse_mnae(fh.read())
    graph = build_reduction(inst)
    write_graph_file(graph, args.out)
    print(
        f"wrote {args.out}: {graph.n} vertices, {graph.m} edges "
        f"({inst.num_vars} variables, {inst.num_clauses} clauses)"
    )
    return 0


def _cmd_check(args) -> int:
    graph = read_graph_file(args.graph)
    budget = _budget_from_args(args)
    record: dict
    if args.kind == "triangle-free":
        ok, witness = is_triangle_free(graph)
        decision = "triangle-free" if ok else f"triangle {witness}"
        record = {
            "name": "triangle-free",
            "target": args.graph,
            "decision": decision,
            "outcome": "pass" if ok else "fail",
            "witness": list(witness) if witness else None,
            "nodes": 0,
            "wall_time_s": 0.0,
            "status": "complete",
        }
        exit_code = 0
    elif args.kind == "coloring":
        result = decide_coloring(ColoringProblem(graph=graph, k=args.k), budget=budget)
        record = {
            "name": f"coloring-k{args.k}",
            "target": args.graph,
            "decision": result.decision,
            "outcome": "inconclusive" if result.colorable is None else "pass",
            "witness": list(result.witness) if result.witness else None,
            "nodes": result.nodes,
            "wall_time_s": round(result.wall_time, 6),
            "status": "budget-exhausted" if result.colorable is None else "complete",
        }
        exit_code = 2 if result.colorable is None else 0
    else:  # snake
        tag = (args.tag_kind, args.tag_count) if args.tag_kind else None
        query = PathQuery(graph, args.target, tag_at_least=tag, budget=budget)
        result = has_induced_path(query)
        record = {
            "name": f"snake-t{args.target}",
            "target": args.graph,
            "decision": result.decision,
            "outcome": "inconclusive" if result.decision == "budget-exhausted" else "pass",
            "witness": list(result.witness) if result.witness else None,
            "nodes": result.nodes,
            "wall_time_s": round(result.wall_time, 6),
            "status": "budget-exhausted" if result.decision == "budget-exhausted" else "complete",
        }
        exit_code = 2 if result.decision == "budget-exhausted" else 0
    print(f"{record['name']}: {record['decision']} (nodes={record['nodes']})")
    if record["witness"]:
        print(f"witness: {record['witness']}")
    if args.report:
        record["_budget"] = {"max_nodes": budget.max_nodes, "max_seconds": budget.max_seconds}
        _write_single_check_report(args.report, record)
    return exit_code


def _cmd_verify_all(args) -> int:
    budget = _budget_from_args(args)
    report = verify_all(budget=budget, threads=args.threads, seed=args.seed)
    for line in render_report_lines(report):
        print(line)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
        print(f"report written to {args.report}")
    return report_exit_code(report)


def _cmd_dump(args) -> int:
    graph = read_graph_file(args.graph)
    sys.stdout.write(write_graph(graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gadgetcheck", description=__doc__)
    parser.add_argument("--version", action="version", version=f"gadgetcheck {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_myc = sub.add_parser("mycielski", help="write a Mycielski family member as a .graph file")
    p_myc.add_argument("--k", type=int, required=True, help="chromatic number, 2..8")
    p_myc.add_argument("--out", required=True, help="output .graph path")
    p_myc.set_defaults(func=_cmd_mycielski)

    p_build = sub.add_parser("build", help="build the reduction graph of a .mnae instance")
    p_build.add_argument("input", help="input .mnae path")
    p_build.add_argument("--out", required=True, help="output .graph path")
    p_build.set_defaults(func=_cmd_build)

    p_check = sub.add_parser("check", help="run one check on a .graph file")
    p_check.add_argument("kind", choices=("triangle-free", "coloring", "snake"))
    p_check.add_argument("graph", help=".graph path")
    p_check.add_argument("--k", type=int, default=4, help="colors for the coloring check")
    p_check.add_argument("--target", type=int, default=19, help="path order for the snake check")
    p_check.add_argument("--tag-kind", default=None, help="restrict snake check to paths with tagged vertices")
    p_check.add_argument("--tag-count", type=int, default=1, help="minimum tagged vertices on the path")
    p_check.add_argument("--report", default=None, help="write a single-check JSON report here")
    _add_budget_flags(p_check, DEFAULT_BUDGET)
    p_check.set_defaults(func=_cmd_check)

    p_all = sub.add_parser("verify-all", help="run the full verification pipeline")
    p_all.add_argument("--report", default=None, help="write the JSON report here")
    p_all.add_argument("--threads", type=int, default=1, help="worker processes for independent checks")
    p_all.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the random corpus instances")
    _add_budget_flags(p_all, DEFAULT_BUDGET)
    p_all.set_defaults(func=_cmd_verify_all)

    p_dump = sub.add_parser("dump", help="parse and re-serialize a .graph file (round-trip check)")
    p_dump.add_argument("graph")
    p_dump.set_defaults(func=_cmd_dump)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
