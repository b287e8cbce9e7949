"""Induced-path engine against the naive oracle and the known path facts."""

import random

import pytest

from gadgetcheck.budget import Budget
from gadgetcheck.graphs import GraphError, induced_subgraph
from gadgetcheck.mycielski import build_m_prime
from gadgetcheck.snake import (
    PathQuery,
    has_induced_path,
    longest_induced_path,
    max_order_with_tag_count,
    naive_enumerate,
    validate_induced_path,
)

from oracles import cycle_graph, path_graph, petersen_graph, random_graph


def test_path_graph_is_its_own_witness():
    g = path_graph(19)
    report = has_induced_path(PathQuery(g, 19))
    assert report.decision == "found"
    assert validate_induced_path(g, report.witness) is None
    assert longest_induced_path(path_graph(7)).order == 7


def test_cycle_five_has_no_spanning_induced_path():
    c5 = cycle_graph(5)
    assert has_induced_path(PathQuery(c5, 5)).decision == "exhausted-no"
    assert longest_induced_path(c5).order == 4
    for t in range(1, 6):
        pruned = has_induced_path(PathQuery(c5, t)).decision == "found"
        assert pruned == naive_enumerate(c5, t)


def test_petersen_longest_induced_path_matches_oracle():
    # value frozen from the naive oracle (and double-checked by subset
    # enumeration): the longest induced path in the Petersen graph has 5
    # vertices, not more
    pet = petersen_graph()
    assert naive_enumerate(pet, 5) and not naive_enumerate(pet, 6)
    assert longest_induced_path(pet).order == 5


def test_pruned_engine_agrees_with_naive_on_random_graphs():
    rng = random.Random(42)
    for _ in range(50):
        g = random_graph(rng, 14, 0.2)
        for t in (5, 8, 11):
            pruned = has_induced_path(PathQuery(g, t)).decision == "found"
            assert pruned == naive_enumerate(g, t)


def test_agrees_on_connector_subgraphs():
    g = build_m_prime().graph
    rng = random.Random(8)
    for _ in range(20):
        keep = rng.sample(range(22), 18)
        sub, _ = induced_subgraph(g, keep)
        pruned = has_induced_path(PathQuery(sub, 10)).decision == "found"
        assert pruned == naive_enumerate(sub, 10)


def test_naive_guard():
    with pytest.raises(GraphError, match="guarded"):
        naive_enumerate(random_graph(random.Random(0), 21, 0.2), 3)


def test_target_validation():
    with pytest.raises(GraphError):
        has_induced_path(PathQuery(cycle_graph(5), 6))
    with pytest.raises(GraphError):
        has_induced_path(PathQuery(cycle_graph(5), 0))


def test_budget_exhaustion_is_not_a_no():
    from gadgetcheck.corefamily import build_core

    g = build_core("g0_0")
    report = has_induced_path(PathQuery(g, 19, budget=Budget(max_nodes=50)))
    assert report.decision == "budget-exhausted"
    assert report.witness is None


def test_anytime_best_is_monotone_in_budget():
    from gadgetcheck.corefamily import build_core

    g = build_core("g0_0")
    orders = []
    for nodes in (200, 2000, 20000):
        rep = longest_induced_path(g, budget=Budget(max_nodes=nodes))
        assert rep.status == "budget-exhausted"
        orders.append(rep.order)
        if rep.witness is not None:
            assert validate_induced_path(g, rep.witness) is None
    assert orders == sorted(orders)
    full = longest_induced_path(g)
    assert full.status == "exhausted"
    assert full.order >= max(orders)


def test_tag_constrained_search_examples():
    from gadgetcheck.gadgets import build_reduction, make_instance

    g = build_reduction(make_instance(3, [(0, 1, 2)]))
    none_case = max_order_with_tag_count(g, "x", 4)
    assert none_case.status == "exhausted" and none_case.order is None
    three = max_order_with_tag_count(g, "x", 3)
    assert three.status == "exhausted"
    assert three.order is not None and three.order <= 15
    assert validate_induced_path(g, three.witness, "x", 3) is None
    # a graph with no x vertices can never satisfy a positive x threshold
    c5 = cycle_graph(5)
    assert max_order_with_tag_count(c5, "x", 1).order is None


def test_tag_constrained_agrees_with_naive_filtering():
    # cross-check the tag-constrained maximum against unconstrained naive
    # enumeration with explicit counting on small reduction subgraphs
    from gadgetcheck.gadgets import build_reduction, make_instance

    g = build_reduction(make_instance(3, [(0, 1, 2)]))
    rng = random.Random(23)
    for _ in range(10):
        keep = sorted(rng.sample(range(g.n), 16))
        sub, _ = induced_subgraph(g, keep)
        got = max_order_with_tag_count(sub, "x", 2)
        best = None
        adj = sub.adj
        xs = {v for v in range(sub.n) if sub.tags[v].kind == "x"}

        def grow(path, on_path):
            nonlocal best
            if len(on_path & xs) >= 2:
                if best is None or len(path) > best:
                    best = len(path)
            tail = path[-1]
            for v in range(sub.n):
                if v in on_path or v not in adj[tail]:
                    continue
                if any(v in adj[u] for u in path[:-1]):
                    continue
                path.append(v)
                on_path.add(v)
                grow(path, on_path)
                path.pop()
                on_path.remove(v)

        for start in range(sub.n):
            grow([start], {start})
        assert got.order == best
