#!/usr/bin/env python3
"""Regenerate the committed golden graph files and the instance corpus.

Run from the repository root after intentionally changing a construction:
    python3 scripts/make_goldens.py
The test suite asserts byte-equality between these files and fresh builds.
"""

from __future__ import annotations

import pathlib

from gadgetcheck.corefamily import CORE_GRAPH_IDS, build_core
from gadgetcheck.corpus import bundled_corpus
from gadgetcheck.gadgets import write_mnae
from gadgetcheck.graphs import write_graph
from gadgetcheck.mycielski import build_m_prime, build_mk

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main() -> None:
    goldens = ROOT / "goldens"
    corpus = ROOT / "corpus"
    goldens.mkdir(exist_ok=True)
    corpus.mkdir(exist_ok=True)

    for core_id in CORE_GRAPH_IDS:
        path = goldens / f"{core_id}.graph"
        path.write_text(write_graph(build_core(core_id)), encoding="utf-8")
        print(f"wrote {path}")
    (goldens / "m5.graph").write_text(write_graph(build_mk(5)), encoding="utf-8")
    (goldens / "m_prime.graph").write_text(write_graph(build_m_prime().graph), encoding="utf-8")
    print(f"wrote {goldens / 'm5.graph'} and {goldens / 'm_prime.graph'}")

    for name, inst in bundled_corpus():
        path = corpus / f"{name}.mnae"
        path.write_text(write_mnae(inst), encoding="utf-8")
    print(f"wrote {len(bundled_corpus())} instances to {corpus}")


if __name__ == "__main__":
    main()
