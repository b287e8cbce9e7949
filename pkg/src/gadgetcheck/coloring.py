"""Exact k-coloring decisions with color lists and forced-distinct pairs.

The solver is a deterministic backtracker: smallest-remaining-list vertex
selection, unit propagation of singleton lists, and sound color-symmetry
breaking. Witnesses are re-validated by an independent checker before they
are returned; "budget-exhausted" is a distinct outcome, never a "no".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .budget import Budget, BudgetClock, UNLIMITED
from .graphs import GraphError, LabeledGraph, adjacency_masks

COLORABLE = "colorable"
NOT_COLORABLE = "not-colorable"
BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class ColoringProblem:
    """Decision instance: does `graph` admit a proper k-coloring respecting
    per-vertex admissible color sets and the extra forced-distinct pairs?"""

    graph: LabeledGraph
    k: int
    lists: Optional[Mapping[int, frozenset[int]]] = None
    forced_distinct: tuple[tuple[int, int], ...] = ()

    def domain_masks(self) -> list[int]:
        full = (1 << self.k) - 1
        if self.k < 1:
            raise GraphError("k must be >= 1")
        doms = [full] * self.graph.n
        if self.lists:
            for v, allowed in self.lists.items():
                if not 0 <= v < self.graph.n:
                    raise GraphError(f"list vertex {v} out of range")
                mask = 0
                for c in allowed:
                    if not 0 <= c < self.k:
                        raise GraphError(f"list color {c} out of range 0..{self.k - 1}")
                    mask |= 1 << c
                if mask == 0:
                    raise GraphError(f"empty color list for vertex {v}")
                doms[v] = mask
        return doms


@dataclass(frozen=True)
class ColoringResult:
    decision: str
    witness: Optional[tuple[int, ...]]
    nodes: int
    wall_time: float

    @property
    def colorable(self) -> Optional[bool]:
        if self.decision == COLORABLE:
            return True
        if self.decision == NOT_COLORABLE:
            return False
        return None


def validate_coloring(problem: ColoringProblem, colors: Sequence[int]) -> Optional[str]:
    """Independent witness checker; returns None if proper, else the reason."""
    g = problem.graph
    if len(colors) != g.n:
        return f"expected {g.n} colors, got {len(colors)}"
    for v, c in enumerate(colors):
        if not 0 <= c < problem.k:
            return f"vertex {v} has color {c} outside 0..{problem.k - 1}"
    if problem.lists:
        for v, allowed in problem.lists.items():
            if colors[v] not in allowed:
                return f"vertex {v} colored {colors[v]} outside its list"
    for u, v in g.edges:
        if colors[u] == colors[v]:
            return f"edge ({u},{v}) monochromatic with color {colors[u]}"
    for u, v in problem.forced_distinct:
        if colors[u] == colors[v]:
            return f"forced pair ({u},{v}) monochromatic with color {colors[u]}"
    return None


def _intact_connector(g: LabeledGraph) -> Optional[tuple[int, int, int, int]]:
    """The four primary connector vertices, iff the canonical 22-vertex
    synchronization subgraph sits intact at ids 0..21 with canonical tags.

    Pre-assigning those four vertices to four distinct colors is only sound
    when every 4-coloring of the host graph restricts to a 4-coloring of the
    intact connector, so this check is deliberately exact.
    """
    from .mycielski import M_PRIME_I, M_PRIME_I_PRIME, build_m_prime  # local: avoids import cycle

    if g.n < 22:
        return None
    for i, v in enumerate(M_PRIME_I):
        if g.tags[v].connector != ("I", i):
            return None
    for i, v in enumerate(M_PRIME_I_PRIME):
        if g.tags[v].connector != ("I'", i):
            return None
    canonical = build_m_prime().graph
    for u, v in canonical.edges:
        if not g.has_edge(u, v):
            return None
    return M_PRIME_I


def _symmetry_preassignment(
    g: LabeledGraph, k: int, lists_full: bool, mode: str
) -> list[tuple[int, int]]:
    """Vertex/color pre-assignments that prune color-permutation symmetry.

    "connector": colors 0..3 on the connector quadruple (k=4, intact
    connector, full lists only). "edge": colors 0,1 on a deterministic
    max-degree edge; sound whenever every vertex has the full list, because
    any proper coloring can be permuted onto the pre-assignment.
    """
    if not lists_full or mode == "none":
        return []
    if mode in ("auto", "connector") and k == 4:
        quad = _intact_connector(g)
        if quad is not None:
            return [(v, i) for i, v in enumerate(quad)]
        if mode == "connector":
            raise GraphError("connector symmetry requested but no intact connector found")
    if g.m == 0 or k < 2:
        return []
    u = max(range(g.n), key=lambda v: (g.degree(v), -v))
    v = max(g.adj[u], key=lambda w: (g.degree(w), -w))
    return [(u, 0), (v, 1)]


def _propagate(domains: list[int], propagated: list[bool], adj: list[int], stack: list[int]) -> bool:
    """Unit-propagate singleton domains; False on a wipeout."""
    while stack:
        v = stack.pop()
        if propagated[v]:
            continue
        propagated[v] = True
        bit = domains[v]
        m = adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            d = domains[u]
            if d & bit:
                d &= ~bit
                if d == 0:
                    return False
                domains[u] = d
                if d & (d - 1) == 0 and not propagated[u]:
                    stack.append(u)
    return True


def decide_coloring(
    problem: ColoringProblem,
    budget: Budget = UNLIMITED,
    symmetry: str = "auto",
    value_hint: Optional[Mapping[int, int]] = None,
) -> ColoringResult:
    """Exact decision for a ColoringProblem.

    symmetry: "auto" (connector pre-assignment when soundly available, else
    an edge break), "connector", "edge", or "none". Deterministic given fixed
    arguments; the returned witness always passes :func:`validate_coloring`.
    """
    g = problem.graph
    k = problem.k
    n = g.n
    domains = problem.domain_masks()
    full = (1 << k) - 1
    lists_full = all(d == full for d in domains)
    adj = adjacency_masks(g)
    for u, v in problem.forced_distinct:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"bad forced-distinct pair ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    clock = BudgetClock(budget)
    for v, c in _symmetry_preassignment(g, k, lists_full, symmetry):
        domains[v] = 1 << c

    propagated = [False] * n
    seeds = [v for v in range(n) if domains[v] & (domains[v] - 1) == 0]
    if not _propagate(domains, propagated, adj, seeds):
        return ColoringResult(NOT_COLORABLE, None, clock.nodes, clock.elapsed())

    hint = dict(value_hint) if value_hint else {}

    def search(doms: list[int], prop: list[bool]) -> Optional[list[int]]:
        if clock.tick():
            return None
        best_v = -1
        best_size = k + 1
        for v in range(n):
            d = doms[v]
            size = d.bit_count()
            if 2 <= size < best_size:
                best_size = size
                best_v = v
                if size == 2:
                    break
        if best_v < 0:
            return doms
        d = doms[best_v]
        order = []
        h = hint.get(best_v)
        if h is not None and d >> h & 1:
            order.append(h)
        c = 0
        dd = d
        while dd:
            if dd & 1 and c != h:
                order.append(c)
            dd >>= 1
            c += 1
        for c in order:
            nd = doms.copy()
            np = prop.copy()
            nd[best_v] = 1 << c
            if _propagate(nd, np, adj, [best_v]):
                res = search(nd, np)
                if res is not None:
                    return res
            if clock.exhausted:
                return None
        return None

    solution = search(domains, propagated)
    wall = clock.elapsed()
    if solution is None:
        if clock.exhausted:
            return ColoringResult(BUDGET_EXHAUSTED, None, clock.nodes, wall)
        return ColoringResult(NOT_COLORABLE, None, clock.nodes, wall)
    witness = tuple(d.bit_length() - 1 for d in solution)
    reason = validate_coloring(problem, witness)
    if reason is not None:
        raise RuntimeError(f"solver produced an invalid coloring: {reason}")
    return ColoringResult(COLORABLE, witness, clock.nodes, wall)


def decide_k_colorable(g: LabeledGraph, k: int, budget: Budget = UNLIMITED, symmetry: str = "auto") -> ColoringResult:
    """Shorthand oracle used by the gadget verifiers: plain k-colorability."""
    return decide_coloring(ColoringProblem(graph=g, k=k), budget=budget, symmetry=symmetry)


@dataclass(frozen=True)
class EndToEndResult:
    """Agreement record between the NAE brute force and the 4-coloring solver
    on one instance and its reduction graph."""

    satisfiable: bool
    nae_witness: Optional[tuple[bool, ...]]
    coloring: ColoringResult
    consistent: Optional[bool]
    detail: str = ""

    @property
    def status(self) -> str:
        if self.consistent is None:
            return BUDGET_EXHAUSTED
        return "consistent" if self.consistent else "inconsistent"


def end_to_end_check(inst, budget: Budget = UNLIMITED) -> EndToEndResult:
    """Check that NAE-satisfiability of an instance matches 4-colorability of
    its reduction graph.

    The NAE side is the exhaustive assignment scan; the coloring side is the
    exact solver. A satisfying assignment is passed down only as a value-order
    hint for the x-type vertices, never trusted as evidence.
    """
    from .gadgets import build_reduction, nae_satisfiable  # local: avoids import cycle

    sat, assignment = nae_satisfiable(inst)
    graph = build_reduction(inst)
    hint = None
    if assignment is not None:
        hint = {22 + i: (0 if value else 1) for i, value in enumerate(assignment)}
    result = decide_coloring(ColoringProblem(graph=graph, k=4), budget=budget, value_hint=hint)
    if result.decision == BUDGET_EXHAUSTED:
        return EndToEndResult(sat, assignment, result, None, "coloring budget exhausted")
    agree = sat == (result.decision == COLORABLE)
    detail = "" if agree else (
        f"NAE says {'satisfiable' if sat else 'unsatisfiable'} but reduction is "
        f"{'4-colorable' if result.decision == COLORABLE else 'not 4-colorable'}"
    )
    return EndToEndResult(sat, assignment, result, agree, detail)
