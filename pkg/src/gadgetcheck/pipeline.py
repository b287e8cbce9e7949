"""The verify-all pipeline: every machine-checkable claim, one JSON report.

Check order: chromatic facts and edge-criticality of the 23-vertex Mycielski
graph; the connector gadget's five properties; deterministic builds,
triangle-freeness, explicit 18-vertex witness paths, and exhaustive
19-vertex-path freeness for the nine core graphs; end-to-end NAE/4-coloring
agreement over the bundled corpus; and the x-vertex path bounds. Checks are
independent pure functions over freshly built graphs, so they may run in a
process pool; the report is assembled in task order and is identical for any
worker count (timing and node-count fields aside, every field is
deterministic).

Verdict rules: "pass" only if every check completed exhaustively and agreed
with the expected facts; any budget exhaustion downgrades to "inconclusive";
any completed contradiction forces "fail".
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from . import __version__
from .budget import Budget
from .coloring import decide_k_colorable, end_to_end_check
from .corefamily import CORE_GRAPH_IDS, build_core, realize_witness_path
from .corpus import DEFAULT_SEED, bundled_corpus, pair_instance_a, single_clause_instance
from .gadgets import MnaeInstance
from .graphs import is_triangle_free, write_graph
from .mycielski import build_m_prime, build_mk, verify_connector_properties, verify_m5_critical
from .snake import EXHAUSTED, PathQuery, has_induced_path, max_order_with_tag_count, validate_induced_path

DEFAULT_BUDGET = Budget(max_nodes=10**9, max_seconds=7200.0)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

CORE_VERTEX_COUNTS = {
    "g0_0": 62, "g0_1": 62, "g0_2": 62, "g0_3": 62, "g0_4": 62, "g0_5": 62,
    "g1": 99, "g2": 103, "g3": 121,
}


def _record(
    name: str,
    target: str,
    decision: str,
    outcome: str,
    nodes: int = 0,
    wall: float = 0.0,
    witness=None,
    budget_hit: bool = False,
) -> dict:
    return {
        "name": name,
        "target": target,
        "decision": decision,
        "outcome": outcome,
        "witness": witness,
        "nodes": nodes,
        "wall_time_s": round(wall, 6),
        "status": "budget-exhausted" if budget_hit else "complete",
    }


def _task_m5(budget: Budget) -> list[dict]:
    m5 = build_mk(5)
    records = [
        _record(
            "m5-counts",
            "m5",
            f"{m5.n} vertices, {m5.m} edges",
            PASS if (m5.n, m5.m) == (23, 71) else FAIL,
        )
    ]
    tri, witness = is_triangle_free(m5)
    records.append(
        _record("m5-triangle-free", "m5", "triangle-free" if tri else f"triangle {witness}",
                PASS if tri else FAIL)
    )
    colorer = lambda g, k: decide_k_colorable(g, k, budget=budget, symmetry="edge")
    crit = verify_m5_critical(colorer)
    records.append(
        _record(
            "m5-not-4-colorable",
            "m5",
            "not-colorable" if crit.not_4_colorable else "colorable",
            INCONCLUSIVE if crit.budget_exhausted else (PASS if crit.not_4_colorable else FAIL),
            budget_hit=crit.budget_exhausted,
        )
    )
    records.append(
        _record(
            "m5-5-colorable",
            "m5",
            "colorable" if crit.five_colorable else "not-colorable",
            INCONCLUSIVE if crit.budget_exhausted else (PASS if crit.five_colorable else FAIL),
            budget_hit=crit.budget_exhausted,
        )
    )
    crit_ok = crit.edge_deletions_4_colorable == crit.edge_count
    records.append(
        _record(
            "m5-edge-criticality",
            "m5",
            f"{crit.edge_deletions_4_colorable}/{crit.edge_count} single-edge deletions 4-colorable",
            INCONCLUSIVE if crit.budget_exhausted else (PASS if crit_ok else FAIL),
            nodes=crit.nodes,
            budget_hit=crit.budget_exhausted,
        )
    )
    return records


def _task_connector(budget: Budget) -> list[dict]:
    gadget = build_m_prime()
    g = gadget.graph
    records = [
        _record(
            "m-prime-counts",
            "m-prime",
            f"{g.n} vertices, {g.m} edges",
            PASS if (g.n, g.m) == (22, 67) else FAIL,
        )
    ]
    colorer = lambda gr, k: decide_k_colorable(gr, k, budget=budget, symmetry="edge")
    rep = verify_connector_properties(gadget, colorer)
    bh = rep.budget_exhausted

    def outcome(ok: bool) -> str:
        return INCONCLUSIVE if bh else (PASS if ok else FAIL)

    records.append(_record("m-prime-independent", "m-prime",
                           "both quadruples independent" if rep.independent_ok else "edge inside a quadruple",
                           PASS if rep.independent_ok else FAIL))
    records.append(_record("m-prime-biadjacency", "m-prime",
                           "t_i~t_j' exactly when i!=j (16 pairs)" if rep.biadjacency_ok else "biadjacency mismatch",
                           PASS if rep.biadjacency_ok else FAIL))
    records.append(_record("m-prime-rainbow-primary", "m-prime",
                           "all 6 contractions not-4-colorable" if rep.rainbow_i_ok else "a contraction is 4-colorable",
                           outcome(rep.rainbow_i_ok), budget_hit=bh))
    records.append(_record("m-prime-rainbow-secondary", "m-prime",
                           "all 6 contractions not-4-colorable" if rep.rainbow_i_prime_ok else "a contraction is 4-colorable",
                           outcome(rep.rainbow_i_prime_ok), budget_hit=bh))
    records.append(_record("m-prime-color-sync", "m-prime",
                           "all 4 cross-edge augmentations not-4-colorable" if rep.sync_ok else "an augmentation is 4-colorable",
                           outcome(rep.sync_ok), budget_hit=bh))
    records.append(_record("m-prime-4-colorable", "m-prime",
                           "colorable" if rep.colorable_ok else "not-colorable",
                           outcome(rep.colorable_ok), nodes=rep.nodes,
                           witness=list(rep.witness_coloring) if rep.witness_coloring else None,
                           budget_hit=bh))
    return records


def _task_core_build(core_id: str) -> list[dict]:
    g = build_core(core_id)
    again = build_core(core_id)
    deterministic = write_graph(g) == write_graph(again)
    count_ok = g.n == CORE_VERTEX_COUNTS[core_id]
    tri, tri_witness = is_triangle_free(g)
    ok = deterministic and count_ok and tri
    decision = f"{g.n} vertices, {g.m} edges, deterministic={deterministic}, triangle-free={tri}"
    records = [_record(f"core-build-{core_id}", core_id, decision, PASS if ok else FAIL)]
    if core_id.startswith("g0_"):
        witness = realize_witness_path(core_id)
        reason = validate_induced_path(g, witness)
        records.append(
            _record(
                f"witness-p18-{core_id}",
                core_id,
                "validated induced path on 18 vertices" if reason is None else f"invalid: {reason}",
                PASS if reason is None and len(witness) == 18 else FAIL,
                witness=list(witness),
            )
        )
    return records


def _task_p19(core_id: str, budget: Budget) -> list[dict]:
    g = build_core(core_id)
    report = has_induced_path(PathQuery(g, 19, budget=budget))
    if report.decision == "exhausted-no":
        outcome = PASS
    elif report.decision == "found":
        outcome = FAIL
    else:
        outcome = INCONCLUSIVE
    return [
        _record(
            f"p19-free-{core_id}",
            core_id,
            report.decision,
            outcome,
            nodes=report.nodes,
            wall=report.wall_time,
            witness=list(report.witness) if report.witness else None,
            budget_hit=report.decision == "budget-exhausted",
        )
    ]


def _task_e2e(name: str, inst: MnaeInstance, budget: Budget) -> list[dict]:
    result = end_to_end_check(inst, budget=budget)
    decision = (
        f"nae={'sat' if result.satisfiable else 'unsat'}, "
        f"4-coloring={result.coloring.decision}"
    )
    if result.consistent is None:
        outcome = INCONCLUSIVE
    else:
        outcome = PASS if result.consistent else FAIL
    witness = None
    if result.coloring.witness is not None:
        witness = list(result.coloring.witness)
    return [
        _record(
            f"e2e-{name}",
            f"reduction({name})",
            decision,
            outcome,
            nodes=result.coloring.nodes,
            wall=result.coloring.wall_time,
            witness=witness,
            budget_hit=result.consistent is None,
        )
    ]


def _task_x_bounds(name: str, inst: MnaeInstance, budget: Budget) -> list[dict]:
    from .gadgets import build_reduction

    g = build_reduction(inst)
    records = []
    four = max_order_with_tag_count(g, "x", 4, budget=budget)
    ok4 = four.status == EXHAUSTED and four.order is None
    records.append(
        _record(
            f"x-bound-{name}-c4",
            f"reduction({name})",
            "no induced path with 4 x-vertices" if four.order is None else f"order {four.order} path found",
            INCONCLUSIVE if four.status != EXHAUSTED else (PASS if ok4 else FAIL),
            nodes=four.nodes,
            wall=four.wall_time,
            witness=list(four.witness) if four.witness else None,
            budget_hit=four.status != EXHAUSTED,
        )
    )
    three = max_order_with_tag_count(g, "x", 3, budget=budget)
    ok3 = three.status == EXHAUSTED and three.order is not None and three.order <= 15
    records.append(
        _record(
            f"x-bound-{name}-c3",
            f"reduction({name})",
            f"max order with 3 x-vertices = {three.order}",
            INCONCLUSIVE if three.status != EXHAUSTED else (PASS if ok3 else FAIL),
            nodes=three.nodes,
            wall=three.wall_time,
            witness=list(three.witness) if three.witness else None,
            budget_hit=three.status != EXHAUSTED,
        )
    )
    return records


def _run_tasks(tasks, threads: int) -> list[dict]:
    if threads <= 1:
        results = [fn(*args) for fn, args in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(threads, len(tasks))) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            results = [f.result() for f in futures]
    return [record for batch in results for record in batch]


def verify_all(
    budget: Budget = DEFAULT_BUDGET,
    threads: int = 1,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Run the whole pipeline and return the report as a JSON-ready dict."""
    tasks: list[tuple] = [(_task_m5, (budget,)), (_task_connector, (budget,))]
    for core_id in CORE_GRAPH_IDS:
        tasks.append((_task_core_build, (core_id,)))
    for core_id in CORE_GRAPH_IDS:
        tasks.append((_task_p19, (core_id, budget)))
    for name, inst in bundled_corpus(seed):
        tasks.append((_task_e2e, (name, inst, budget)))
    tasks.append((_task_x_bounds, ("single-clause", single_clause_instance(), budget)))
    tasks.append((_task_x_bounds, ("pair-a", pair_instance_a(), budget)))

    checks = _run_tasks(tasks, threads)
    if any(c["outcome"] == FAIL for c in checks):
        verdict = FAIL
    elif any(c["outcome"] == INCONCLUSIVE for c in checks):
        verdict = INCONCLUSIVE
    else:
        verdict = PASS
    return {
        "tool": "gadgetcheck",
        "version": __version__,
        "schema_version": 1,
        "seed": seed,
        "threads": threads,
        "budget": {"max_nodes": budget.max_nodes, "max_seconds": budget.max_seconds},
        "checks": checks,
        "verdict": verdict,
    }


def report_exit_code(report: dict) -> int:
    return {PASS: 0, INCONCLUSIVE: 2}.get(report["verdict"], 1)


def strip_volatile_fields(report: dict) -> dict:
    """Copy of a report without timing/node-count fields, for determinism
    comparisons across runs and worker counts."""
    out = {k: v for k, v in report.items() if k != "threads"}
    out["checks"] = [
        {k: v for k, v in check.items() if k not in ("nodes", "wall_time_s")}
        for check in report["checks"]
    ]
    return out


def load_report_schema() -> dict:
    text = resources.files("gadgetcheck").joinpath("schemas/report_v1.json").read_text("utf-8")
    return json.loads(text)


def render_report_lines(report: dict) -> list[str]:
    lines = []
    for check in report["checks"]:
        lines.append(
            f"[{check['outcome'].upper():>12}] {check['name']}: {check['decision']}"
            f" (nodes={check['nodes']}, t={check['wall_time_s']:.2f}s)"
        )
    lines.append(f"verdict: {report['verdict']}")
    return lines
