"""The Mycielski family and the trimmed color-synchronization gadget.

The iterative construction fixes one canonical numbering: starting from the
two-vertex complete graph, each round keeps the previous vertices 0..n-1,
adds the shadow of vertex i as n+i, and appends the universal vertex 2n.
All distinguished indices below (the deleted vertex, the two connector
quadruples) refer to this numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .coloring import ColoringResult, COLORABLE, NOT_COLORABLE
from .graphs import (
    GraphError,
    LabeledGraph,
    VertexTag,
    add_edge,
    build_graph,
    contract_vertices,
    delete_edge,
    induced_subgraph,
)

# Canonical connector data: vertex deleted from the 23-vertex graph, and the
# two quadruples in the 22-vertex remainder after the order-preserving rename.
M5_DELETED_VERTEX = 16
M_PRIME_I = (1, 3, 10, 21)
M_PRIME_I_PRIME = (19, 17, 11, 5)

_MYCIELSKI_TAG = VertexTag(kind="mycielski")

# Oracle signature: graph, k -> ColoringResult
ColoringOracle = Callable[[LabeledGraph, int], ColoringResult]


def mycielskian(g: LabeledGraph) -> LabeledGraph:
    """One Mycielski round: originals keep their ids, shadow of i is n+i,
    and 2n is the universal vertex over the shadows.

    Output has 2n+1 vertices and 3m+n edges; triangle-freeness is preserved.
    """
    if g.n < 1:
        raise GraphError("mycielskian needs at least one vertex")
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((n + u, v))
    for i in range(n):
        edges.append((n + i, 2 * n))
    tags = tuple(_MYCIELSKI_TAG for _ in range(2 * n + 1))
    return build_graph(2 * n + 1, edges, tags)


@lru_cache(maxsize=None)
def build_mk(k: int) -> LabeledGraph:
    """k-chromatic triangle-free member of the family, 2 <= k <= 8.

    k=2 is the single edge on {0,1}; each further k applies one Mycielski
    round, so vertex/edge counts follow n -> 2n+1 and m -> 3m+n.
    """
    if not 2 <= k <= 8:
        raise GraphError(f"k={k} outside the supported range 2..8")
    g = build_graph(2, [(0, 1)], (_MYCIELSKI_TAG, _MYCIELSKI_TAG))
    for _ in range(k - 2):
        g = mycielskian(g)
    return g


@dataclass(frozen=True)
class ConnectorGadget:
    """22-vertex synchronization gadget with its two distinguished quadruples.

    quad_i[j] and quad_i_prime[j] are the vertex ids of t_j and t_j'; in every
    4-coloring both quadruples are rainbow and t_j' repeats t_j's color.
    """

    graph: LabeledGraph
    quad_i: tuple[int, int, int, int]
    quad_i_prime: tuple[int, int, int, int]


@lru_cache(maxsize=None)
def build_m_prime() -> ConnectorGadget:
    """Delete vertex 16 from the canonical 23-vertex graph, shift the higher
    ids down by one, and tag the two connector quadruples.

    Deterministic: repeated calls produce identical graphs (cached, and the
    construction itself is closed-form).
    """
    m5 = build_mk(5)
    keep = [v for v in range(m5.n) if v != M5_DELETED_VERTEX]
    trimmed, _ = induced_subgraph(m5, keep)
    tags = list(trimmed.tags)
    for idx, v in enumerate(M_PRIME_I):
        tags[v] = VertexTag(kind="mycielski", connector=("I", idx))
    for idx, v in enumerate(M_PRIME_I_PRIME):
        tags[v] = VertexTag(kind="mycielski", connector=("I'", idx))
    graph = build_graph(trimmed.n, trimmed.edges, tuple(tags))
    return ConnectorGadget(graph=graph, quad_i=M_PRIME_I, quad_i_prime=M_PRIME_I_PRIME)


@dataclass(frozen=True)
class ConnectorReport:
    """Outcome of the five connector-property checks.

    The rainbow claims are established by contraction: "every 4-coloring
    gives u,v distinct colors" holds iff the graph with u,v identified is not
    4-colorable. The color-sync claim uses edge augmentation: "every
    4-coloring gives u,v equal colors" holds iff graph+uv is not 4-colorable.
    Either way each claim becomes a handful of exact UNSAT decisions instead
    of an enumeration of all colorings.
    """

    independent_ok: bool
    biadjacency_ok: bool
    rainbow_i_ok: bool
    rainbow_i_prime_ok: bool
    sync_ok: bool
    colorable_ok: bool
    witness_coloring: Optional[tuple[int, ...]]
    nodes: int
    budget_exhausted: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.independent_ok
            and self.biadjacency_ok
            and self.rainbow_i_ok
            and self.rainbow_i_prime_ok
            and self.sync_ok
            and self.colorable_ok
            and not self.budget_exhausted
        )


def _all_unsat(graphs, colorer: ColoringOracle) -> tuple[bool, int, bool]:
    """(all graphs non-4-colorable, total nodes, budget hit)."""
    ok = True
    nodes = 0
    exhausted = False
    for graph in graphs:
        res = colorer(graph, 4)
        nodes += res.nodes
        if res.decision == NOT_COLORABLE:
            continue
        if res.decision == COLORABLE:
            ok = False
        else:
            exhausted = True
    return ok, nodes, exhausted


def verify_connector_properties(c: ConnectorGadget, colorer: ColoringOracle) -> ConnectorReport:
    """Machine-check the connector's contract with an exact coloring oracle.

    The oracle must not itself assume the rainbow property (it is what this
    function establishes); pass a solver configured with a generic symmetry
    break. All 16 derived decision calls are independent of each other.
    """
    g = c.graph
    quad_i, quad_ip = c.quad_i, c.quad_i_prime

    independent = all(
        not g.has_edge(a, b)
        for quad in (quad_i, quad_ip)
        for i, a in enumerate(quad)
        for b in quad[i + 1 :]
    )
    biadjacency = all(
        g.has_edge(quad_i[i], quad_ip[j]) == (i != j) for i in range(4) for j in range(4)
    )

    within = [(q[i], q[j]) for q in (quad_i, quad_ip) for i in range(4) for j in range(i + 1, 4)]
    rainbow_i_ok, nodes_i, ex_i = _all_unsat(
        (contract_vertices(g, u, v) for u, v in within[:6]), colorer
    )
    rainbow_ip_ok, nodes_ip, ex_ip = _all_unsat(
        (contract_vertices(g, u, v) for u, v in within[6:]), colorer
    )
    sync_pairs = [(quad_i[i], quad_ip[i]) for i in range(4)]
    sync_ok, nodes_sync, ex_sync = _all_unsat(
        (add_edge(g, u, v) for u, v in sync_pairs), colorer
    )

    base = colorer(g, 4)
    colorable_ok = base.decision == COLORABLE
    exhausted = ex_i or ex_ip or ex_sync or base.decision not in (COLORABLE, NOT_COLORABLE)

    return ConnectorReport(
        independent_ok=independent,
        biadjacency_ok=biadjacency,
        rainbow_i_ok=rainbow_i_ok,
        rainbow_i_prime_ok=rainbow_ip_ok,
        sync_ok=sync_ok,
        colorable_ok=colorable_ok,
        witness_coloring=base.witness,
        nodes=nodes_i + nodes_ip + nodes_sync + base.nodes,
        budget_exhausted=exhausted,
    )


@dataclass(frozen=True)
class CriticalityReport:
    not_4_colorable: bool
    five_colorable: bool
    edge_deletions_4_colorable: int
    edge_count: int
    nodes: int
    budget_exhausted: bool

    @property
    def critical(self) -> bool:
        return (
            self.not_4_colorable
            and self.five_colorable
            and self.edge_deletions_4_colorable == self.edge_count
            and not self.budget_exhausted
        )


def verify_m5_critical(colorer: ColoringOracle) -> CriticalityReport:
    """Check 5-chromatic edge-criticality of the 23-vertex family member:
    the graph itself needs 5 colors, but dropping any single edge admits 4."""
    m5 = build_mk(5)
    base4 = colorer(m5, 4)
    base5 = colorer(m5, 5)
    nodes = base4.nodes + base5.nodes
    exhausted = base4.decision not in (COLORABLE, NOT_COLORABLE) or base5.decision not in (
        COLORABLE,
        NOT_COLORABLE,
    )
    good_deletions = 0
    for u, v in m5.edges:
        res = colorer(delete_edge(m5, u, v), 4)
        nodes += res.nodes
        if res.decision == COLORABLE:
            good_deletions += 1
        elif res.decision != NOT_COLORABLE:
            exhausted = True
    return CriticalityReport(
        not_4_colorable=base4.decision == NOT_COLORABLE,
        five_colorable=base5.decision == COLORABLE,
        edge_deletions_4_colorable=good_deletions,
        edge_count=m5.m,
        nodes=nodes,
        budget_exhausted=exhausted,
    )
