"""graph-core: construction, queries, and the .graph file format."""

import random

import pytest

from gadgetcheck.graphs import (
    GraphError,
    GraphFormatError,
    VertexTag,
    add_edge,
    build_graph,
    contract_vertices,
    induced_subgraph,
    is_triangle_free,
    read_graph,
    write_graph,
)
from gadgetcheck.mycielski import build_m_prime, build_mk

from oracles import cycle_graph, random_graph, triangle_free_brute


def test_add_edge_base_case():
    g = build_graph(2, [])
    g2 = add_edge(g, 0, 1)
    assert g2.m == 1 and g2.has_edge(0, 1)


def test_add_edge_idempotent():
    g = add_edge(add_edge(build_graph(2, []), 0, 1), 0, 1)
    assert g.m == 1


def test_add_edge_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        add_edge(build_graph(2, []), 0, 0)


def test_add_edge_rejects_out_of_range():
    with pytest.raises(GraphError, match="out of range"):
        add_edge(build_graph(2, []), 0, 2)


def test_tags_validated():
    with pytest.raises(GraphError):
        VertexTag(kind="nonsense")
    with pytest.raises(GraphError):
        VertexTag(kind="x", connector=("I", 0))  # connector only on mycielski
    with pytest.raises(GraphError):
        build_graph(
            2,
            [],
            (VertexTag("mycielski", ("I", 1)), VertexTag("mycielski", ("I", 1))),
        )


def test_triangle_free_examples():
    assert is_triangle_free(cycle_graph(5)) == (True, None)
    ok, witness = is_triangle_free(build_graph(3, [(0, 1), (0, 2), (1, 2)]))
    assert not ok and witness == (0, 1, 2)


def test_triangle_free_agrees_with_brute_force():
    from gadgetcheck.gadgets import build_reduction, make_instance

    rng = random.Random(11)
    graphs = [build_mk(5), build_m_prime().graph, build_reduction(make_instance(5, [(0, 1, 2), (2, 3, 4)]))]
    for _ in range(20):
        graphs.append(random_graph(rng, rng.randint(4, 40), rng.choice((0.1, 0.3, 0.6))))
    for g in graphs:
        assert is_triangle_free(g)[0] == triangle_free_brute(g)[0]


def test_induced_subgraph_consecutive_cycle_vertices_form_path():
    sub, remap = induced_subgraph(cycle_graph(5), [1, 2, 3])
    assert remap == (1, 2, 3)
    assert sub.edges == ((0, 1), (1, 2))


def test_induced_subgraph_empty_set():
    sub, remap = induced_subgraph(cycle_graph(5), [])
    assert sub.n == 0 and sub.m == 0 and remap == ()


def test_induced_subgraph_edge_characterization():
    rng = random.Random(5)
    for _ in range(25):
        g = random_graph(rng, 12, 0.4)
        s = sorted(rng.sample(range(12), rng.randint(0, 12)))
        sub, remap = induced_subgraph(g, s)
        expected = {(u, v) for u, v in g.edges if u in s and v in s}
        back = {(remap[u], remap[v]) for u, v in sub.edges}
        assert back == expected


def test_contract_vertices_merges_neighborhoods():
    g = build_graph(4, [(0, 1), (2, 3)])
    merged = contract_vertices(g, 0, 2)  # non-adjacent
    assert merged.n == 3
    assert set(merged.edges) == {(0, 1), (0, 2)}
    with pytest.raises(GraphError, match="adjacent"):
        contract_vertices(g, 0, 1)


def test_write_k2_round_trip():
    g = build_graph(2, [(0, 1)])
    text = write_graph(g)
    assert text.splitlines()[0] == "graph 2 1"
    assert "e 0 1" in text
    assert read_graph(text) == g


def test_round_trip_on_constructed_graphs():
    from gadgetcheck.corefamily import CORE_GRAPH_IDS, build_core
    from gadgetcheck.gadgets import build_reduction, make_instance

    graphs = [build_mk(k) for k in range(2, 6)]
    graphs.append(build_m_prime().graph)
    graphs.extend(build_core(cid) for cid in CORE_GRAPH_IDS)
    graphs.append(build_reduction(make_instance(3, [(0, 1, 2)])))
    for g in graphs:
        text = write_graph(g)
        assert read_graph(text) == g
        assert write_graph(read_graph(text)) == text


def test_m_prime_file_shape():
    text = write_graph(build_m_prime().graph)
    lines = text.splitlines()
    assert lines[0] == "graph 22 67"
    assert sum(1 for ln in lines if ln.startswith("v ")) == 22
    assert sum(1 for ln in lines if ln.startswith("e ")) == 67


def test_parse_error_carries_line_number():
    text = "graph 2 1\nv 0 plain\nv 1 plain\ne 0\n"
    with pytest.raises(GraphFormatError, match="line 4"):
        read_graph(text)


def test_parse_rejects_duplicate_edge():
    text = "graph 2 2\nv 0 plain\nv 1 plain\ne 0 1\ne 1 0\n"
    with pytest.raises(GraphFormatError, match="duplicate edge"):
        read_graph(text)


def test_parse_rejects_bad_header_and_kind():
    with pytest.raises(GraphFormatError, match="line 1"):
        read_graph("digraph 2 1\n")
    with pytest.raises(GraphFormatError, match="unknown vertex kind"):
        read_graph("graph 1 0\nv 0 q\n")
