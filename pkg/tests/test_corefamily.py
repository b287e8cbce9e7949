"""The nine fixed graphs: counts, goldens, witness paths, symmetry."""

import pathlib

import pytest

from gadgetcheck.corefamily import CORE_GRAPH_IDS, build_core, realize_witness_path
from gadgetcheck.graphs import GraphError, is_triangle_free, write_graph
from gadgetcheck.snake import validate_induced_path

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent

EXPECTED_COUNTS = {
    "g0_0": (62, 177), "g0_1": (62, 177), "g0_2": (62, 177),
    "g0_3": (62, 177), "g0_4": (62, 177), "g0_5": (62, 177),
    "g1": (99, 263), "g2": (103, 277), "g3": (121, 323),
}


def test_exactly_nine_ids():
    assert len(CORE_GRAPH_IDS) == 9
    with pytest.raises(GraphError, match="unknown core graph id"):
        build_core("g4")


def test_counts_triangle_freeness_and_determinism():
    for cid in CORE_GRAPH_IDS:
        g = build_core(cid)
        assert (g.n, g.m) == EXPECTED_COUNTS[cid]
        assert is_triangle_free(g)[0]
        assert write_graph(g) == write_graph(build_core(cid))


def test_goldens_match_fresh_builds():
    for cid in CORE_GRAPH_IDS:
        golden = (REPO_ROOT / "goldens" / f"{cid}.graph").read_text(encoding="utf-8")
        assert write_graph(build_core(cid)) == golden


def test_connector_untouched_inside_core_graphs():
    from gadgetcheck.mycielski import build_m_prime

    m_prime = build_m_prime().graph
    for cid in CORE_GRAPH_IDS:
        g = build_core(cid)
        inner = tuple(e for e in g.edges if e[0] < 22 and e[1] < 22)
        assert inner == m_prime.edges
        assert g.tags[:22] == m_prime.tags


def test_witness_path_valid_in_every_five_gadget_graph():
    for i in range(6):
        cid = f"g0_{i}"
        g = build_core(cid)
        seq = realize_witness_path(cid)
        assert len(seq) == 18
        assert validate_induced_path(g, seq) is None
        kinds = [g.tags[v].kind for v in seq]
        assert kinds == [
            "a", "b", "a", "b", "a", "mycielski",
            "a", "b", "a", "b", "a", "c", "mycielski",
            "c", "a", "b", "a", "b",
        ]
        assert seq[5] == 21 and seq[12] == 5  # t_3 then t_3'


def test_witness_path_rejected_for_other_ids():
    with pytest.raises(GraphError):
        realize_witness_path("g1")


def test_variant_swap_degree_symmetry():
    for i in range(6):
        a = sorted(build_core(f"g0_{i}").degree(v) for v in range(62))
        b = sorted(build_core(f"g0_{5 - i}").degree(v) for v in range(62))
        assert a == b


def test_x_vertices_carry_connector_edges():
    for cid in ("g1", "g2", "g3"):
        g = build_core(cid)
        for v in range(g.n):
            if g.tags[v].kind == "x":
                assert g.has_edge(v, 10) and g.has_edge(v, 21)  # t_2 and t_3


def test_g3_lone_b_vertex_sees_both_x_vertices():
    g = build_core("g3")
    bs = [v for v in range(g.n) if g.tags[v].kind == "b"]
    assert len(bs) == 1
    assert g.neighbors(bs[0]) == frozenset({22, 23, 19, 17})  # both x, t_0', t_1'


def test_bless_gadget_cs_have_no_x_neighbor():
    g = build_core("g1")
    xs = {v for v in range(g.n) if g.tags[v].kind == "x"}
    # copies 8..15 are the detached gadgets
    for v in range(g.n):
        tag = g.tags[v]
        if tag.kind == "c" and tag.provenance and tag.provenance[0] >= 8:
            assert not (g.neighbors(v) & xs)
