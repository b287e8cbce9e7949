"""Pipeline report shape, schema conformance, and budget semantics.

The full default-budget pipeline runs (twice) in the acceptance module; here
we only exercise the cheap paths and the report plumbing.
"""

import jsonschema

from gadgetcheck.budget import Budget
from gadgetcheck.corpus import bundled_corpus
from gadgetcheck.pipeline import (
    load_report_schema,
    report_exit_code,
    strip_volatile_fields,
    verify_all,
)


def test_corpus_composition():
    names = [name for name, _ in bundled_corpus()]
    assert names[:4] == ["single-clause", "pair-a", "pair-b", "fano"]
    assert len(names) == 24
    for _, inst in bundled_corpus():
        assert inst.num_vars <= 7
        assert inst.num_clauses <= 7


def test_corpus_files_match_generator():
    import pathlib

    from gadgetcheck.gadgets import write_mnae

    root = pathlib.Path(__file__).resolve().parent.parent / "corpus"
    for name, inst in bundled_corpus():
        assert (root / f"{name}.mnae").read_text(encoding="utf-8") == write_mnae(inst)


def test_tiny_budget_is_inconclusive_and_schema_valid():
    report = verify_all(budget=Budget(max_nodes=500, max_seconds=60.0))
    assert report["verdict"] == "inconclusive"
    assert report_exit_code(report) == 2
    jsonschema.validate(report, load_report_schema())
    p19 = [c for c in report["checks"] if c["name"].startswith("p19-free-")]
    assert p19 and all(c["status"] == "budget-exhausted" for c in p19)
    assert all(c["outcome"] != "fail" for c in p19)


def test_strip_volatile_fields_removes_only_timing_and_nodes():
    report = verify_all(budget=Budget(max_nodes=200, max_seconds=60.0))
    stripped = strip_volatile_fields(report)
    assert "threads" not in stripped
    for check in stripped["checks"]:
        assert "nodes" not in check and "wall_time_s" not in check
        assert {"name", "target", "decision", "outcome", "witness", "status"} <= set(check)
