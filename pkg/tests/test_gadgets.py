"""Instance parsing, the NAE brute force, and the reduction construction."""

import random

import pytest

from gadgetcheck.gadgets import (
    MnaeFormatError,
    build_reduction,
    make_instance,
    nae_satisfiable,
    parse_mnae,
    write_mnae,
    x_vertex,
)
from gadgetcheck.graphs import GraphError, is_triangle_free, write_graph
from gadgetcheck.corpus import fano_instance
from gadgetcheck.mycielski import M_PRIME_I, M_PRIME_I_PRIME


def test_parse_basic():
    inst = parse_mnae("mnae 3 1\n0 1 2\n")
    assert inst.num_vars == 3 and inst.clauses == ((0, 1, 2),)


def test_parse_comments_and_order_normalization():
    inst = parse_mnae("# comment\nmnae 4 2  # trailing\n2 0 1\n\n3 1 0\n")
    assert inst.clauses == ((0, 1, 2), (0, 1, 3))


def test_parse_rejects_repeated_variable():
    with pytest.raises(MnaeFormatError, match="repeated variable"):
        parse_mnae("mnae 3 1\n0 0 1\n")


def test_parse_rejects_bad_arity_and_range():
    with pytest.raises(MnaeFormatError, match="exactly 3"):
        parse_mnae("mnae 3 1\n0 1\n")
    with pytest.raises(MnaeFormatError, match="out of range"):
        parse_mnae("mnae 3 1\n0 1 3\n")
    with pytest.raises(MnaeFormatError, match="mnae"):
        parse_mnae("0 1 2\n")
    with pytest.raises(MnaeFormatError, match="claims"):
        parse_mnae("mnae 3 2\n0 1 2\n")


def test_fano_parses_and_is_nae_unsatisfiable():
    text = write_mnae(fano_instance())
    inst = parse_mnae(text)
    assert inst.num_vars == 7 and inst.num_clauses == 7
    sat, witness = nae_satisfiable(inst)
    assert not sat and witness is None


def test_nae_satisfiable_examples():
    sat, witness = nae_satisfiable(make_instance(3, [(0, 1, 2)]))
    assert sat
    trues = sum(witness[v] for v in (0, 1, 2))
    assert 1 <= trues <= 2
    assert nae_satisfiable(make_instance(2, []))[0]  # vacuous


def test_nae_brute_force_guard():
    with pytest.raises(GraphError, match="guarded"):
        nae_satisfiable(make_instance(25, []))


def test_reduction_counts_single_clause():
    g = build_reduction(make_instance(3, [(0, 1, 2)]))
    assert (g.n, g.m) == (41, 135)


def test_reduction_degenerate_instance():
    g = build_reduction(make_instance(1, []))
    assert g.n == 23
    x = x_vertex(0)
    assert g.neighbors(x) == frozenset({M_PRIME_I[2], M_PRIME_I[3]})


def test_reduction_count_formulas_hold_on_random_instances():
    rng = random.Random(77)
    for _ in range(50):
        n = rng.randint(3, 8)
        m = rng.randint(0, 5)
        clauses = [tuple(sorted(rng.sample(range(n), 3))) for _ in range(m)]
        g = build_reduction(make_instance(n, clauses))
        assert g.n == 22 + n + 16 * m
        assert g.m == 67 + 2 * n + 50 * m + 4 * n * m


def test_every_reduction_is_triangle_free():
    rng = random.Random(78)
    instances = [make_instance(3, [(0, 1, 2)]), fano_instance()]
    for _ in range(20):
        n = rng.randint(3, 6)
        m = rng.randint(1, 4)
        instances.append(make_instance(n, [tuple(sorted(rng.sample(range(n), 3))) for _ in range(m)]))
    for inst in instances:
        assert is_triangle_free(build_reduction(inst))[0]


def test_reduction_is_deterministic():
    inst = fano_instance()
    assert write_graph(build_reduction(inst)) == write_graph(build_reduction(inst))


def test_duplicate_clauses_build_separate_gadgets():
    g = build_reduction(make_instance(3, [(0, 1, 2), (0, 1, 2)]))
    assert g.n == 22 + 3 + 32


def _connector_partition(g):
    inside = set(range(22))
    outside = set(range(22, g.n))
    return inside, outside


def test_separation_facts_behind_triangle_freeness():
    # the two facts the triangle-freeness argument leans on: adjacent outside
    # vertices never share a connector neighbor, and no outside vertex sees
    # both endpoints of a primary/secondary cross edge
    rng = random.Random(79)
    instances = [make_instance(3, [(0, 1, 2)]), fano_instance()]
    for _ in range(10):
        n = rng.randint(3, 6)
        m = rng.randint(1, 3)
        instances.append(make_instance(n, [tuple(sorted(rng.sample(range(n), 3))) for _ in range(m)]))
    for inst in instances:
        g = build_reduction(inst)
        inside, outside = _connector_partition(g)
        for u, v in g.edges:
            if u in outside and v in outside:
                assert not (g.neighbors(u) & g.neighbors(v) & inside)
        cross = [
            (t, tp)
            for t in M_PRIME_I
            for tp in M_PRIME_I_PRIME
            if g.has_edge(t, tp)
        ]
        for w in outside:
            for t, tp in cross:
                assert not (g.has_edge(w, t) and g.has_edge(w, tp))


def test_b_vertices_see_every_x_vertex():
    inst = make_instance(5, [(0, 1, 2), (2, 3, 4)])
    g = build_reduction(inst)
    xs = {x_vertex(i) for i in range(5)}
    for v in range(g.n):
        if g.tags[v].kind == "b":
            assert xs <= g.neighbors(v)
