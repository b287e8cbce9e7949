"""Independent brute-force oracles the solver tests compare against.

These deliberately share no machinery with the package solvers: fixed vertex
order, no heuristics, no propagation, no symmetry breaking.
"""

from __future__ import annotations

import itertools

from gadgetcheck.graphs import LabeledGraph, build_graph


def triangle_free_brute(g: LabeledGraph):
    """Check all vertex triples."""
    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            return False, (a, b, c)
    return True, None


def colorable_by_enumeration(g: LabeledGraph, k: int, lists=None) -> bool:
    """Exhaustive scan of the k^n assignments in vertex order; a prefix is
    abandoned as soon as it is improper, which visits exactly the proper
    partial assignments and nothing else."""
    n = g.n
    earlier = [sorted(w for w in g.adj[v] if w < v) for v in range(n)]
    allowed = [sorted(lists[v]) if lists and v in lists else range(k) for v in range(n)]
    colors = [0] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        for c in allowed[v]:
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                if assign(v + 1):
                    return True
        return False

    return assign(0)


def random_graph(rng, n: int, p: float) -> LabeledGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def cycle_graph(n: int) -> LabeledGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> LabeledGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> LabeledGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)
