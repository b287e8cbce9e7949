"""Exact induced-path searches: P_t membership, longest induced path, and
tag-constrained variants, plus the unpruned oracle used to cross-check them.

The pruned engine extends a path only at its tail. Throughout a search,
`avail` is the bitmask of vertices that are outside the path and non-adjacent
to every non-tail path vertex; all future path vertices must come from it, so
it shrinks monotonically and drives both pruning bounds:

* reachability: future vertices also have to be reachable from the tail
  inside the graph induced on `avail` + tail, so a BFS count bounds the best
  achievable order;
* twin reduction: two candidate extensions are interchangeable when swapping
  them (together with their single private neighbors, if any) is an
  automorphism of the graph induced on `avail` + tail. Any completion through
  the skipped candidate maps to one through the explored representative, so
  only one member of each class is expanded. This is what collapses the
  interchangeable detached a/c-pair copies in the larger gadget graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .budget import Budget, BudgetClock, UNLIMITED
from .graphs import GraphError, KINDS, LabeledGraph, adjacency_masks

FOUND = "found"
EXHAUSTED_NO = "exhausted-no"
EXHAUSTED = "exhausted"
BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class PathQuery:
    """Decision query: does `graph` contain an induced path on `target`
    vertices, optionally with at least `tag_at_least[1]` vertices of kind
    `tag_at_least[0]`?"""

    graph: LabeledGraph
    target: int
    tag_at_least: Optional[tuple[str, int]] = None
    budget: Budget = UNLIMITED


@dataclass(frozen=True)
class SearchReport:
    decision: str
    witness: Optional[tuple[int, ...]]
    nodes: int
    wall_time: float
    max_order_found: int


@dataclass(frozen=True)
class LongestReport:
    """Result of an order-maximizing search; on budget exhaustion `order` and
    `witness` hold the best seen so far (anytime behavior)."""

    status: str
    order: Optional[int]
    witness: Optional[tuple[int, ...]]
    nodes: int
    wall_time: float


def validate_induced_path(
    g: LabeledGraph,
    seq: Iterable[int],
    tag_kind: Optional[str] = None,
    min_count: int = 0,
) -> Optional[str]:
    """Independent witness checker; None if seq is an induced path meeting the
    tag threshold, else the reason it is not."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return "repeated vertex"
    for v in seq:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range"
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            v = seq[j]
            adjacent = g.has_edge(u, v)
            if j == i + 1 and not adjacent:
                return f"consecutive vertices {u},{v} not adjacent"
            if j > i + 1 and adjacent:
                return f"chord between positions {i} and {j} ({u},{v})"
    if tag_kind is not None:
        have = sum(1 for v in seq if g.tags[v].kind == tag_kind)
        if have < min_count:
            return f"only {have} vertices of kind {tag_kind!r}, needed {min_count}"
    return None


def _tag_mask(g: LabeledGraph, kind: Optional[str]) -> int:
    if kind is None:
        return 0
    if kind not in KINDS:
        raise GraphError(f"unknown vertex kind {kind!r}")
    mask = 0
    for v in range(g.n):
        if g.tags[v].kind == kind:
            mask |= 1 << v
    return mask


class _Engine:
    """One search run. decision mode (target set): stop at the first induced
    path of exactly `target` vertices meeting the tag threshold; depth is
    capped at `target`, which is complete because every induced P_t is also
    enumerated from its own endpoint. maximize mode (target None): exhaust,
    tracking the best qualifying order."""

    def __init__(
        self,
        g: LabeledGraph,
        target: Optional[int],
        tag_kind: Optional[str],
        min_tags: int,
        budget: Budget,
        twins: bool = True,
    ):
        self.g = g
        self.n = g.n
        self.adj = adjacency_masks(g)
        self.target = target
        self.min_tags = min_tags
        self.tagmask = _tag_mask(g, tag_kind)
        self.constrained = tag_kind is not None and min_tags > 0
        self.clock = BudgetClock(budget)
        self.twins = twins
        self.path: list[int] = []
        self.best_order = 0
        self.best_witness: Optional[tuple[int, ...]] = None
        self.found: Optional[tuple[int, ...]] = None

    def _reach(self, tail: int, avail: int) -> int:
        adj = self.adj
        frontier = adj[tail] & avail
        reach = frontier
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & -m
                grow |= adj[b.bit_length() - 1]
                m ^= b
            frontier = grow & avail & ~reach
            reach |= frontier
        return reach

    def _representatives(self, cand_ids: list[int], context: int) -> list[int]:
        """Drop candidates interchangeable with an earlier one.

        Two candidates are interchangeable when their neighborhoods inside
        `context` coincide, or differ in exactly one private neighbor each
        whose own outside-neighborhoods coincide; both cases define an
        automorphism of the graph induced on `context` that swaps them, so no
        completion is lost. Tag membership must survive the swap when the
        search is tag-constrained.
        """
        adj = self.adj
        tagmask = self.tagmask if self.constrained else 0
        reps: list[int] = []
        sigs: list[int] = []
        for v in cand_ids:
            dv = adj[v] & context
            vbit = 1 << v
            dup = False
            for w, dw in zip(reps, sigs):
                if tagmask and (tagmask >> v ^ tagmask >> w) & 1:
                    continue
                if dv == dw:
                    dup = True
                    break
                diff = dv ^ dw
                if diff.bit_count() == 2:
                    pv = diff & dv
                    pw = diff & dw
                    if pv and pw:
                        iv = pv.bit_length() - 1
                        iw = pw.bit_length() - 1
                        if tagmask and (tagmask >> iv ^ tagmask >> iw) & 1:
                            continue
                        outside = context & ~(vbit | 1 << w | pv | pw)
                        if adj[iv] & outside == adj[iw] & outside:
                            dup = True
                            break
            if not dup:
                reps.append(v)
                sigs.append(dv)
        return reps

    def _extend(self, tail: int, avail: int, tags: int) -> bool:
        """Returns True to abort the whole search (found / budget)."""
        if self.clock.tick():
            return True
        k = len(self.path)
        if tags >= self.min_tags:
            if k > self.best_order:
                self.best_order = k
                self.best_witness = tuple(self.path)
            if self.target is not None and k >= self.target:
                self.found = tuple(self.path)
                return True
        if self.target is not None and k >= self.target:
            return False
        ext = self.adj[tail] & avail
        if not ext:
            return False
        need = (self.target if self.target is not None else self.best_order + 1) - k
        if need > avail.bit_count():
            return False
        if need > 1 or self.constrained:
            reach = self._reach(tail, avail)
            if reach.bit_count() < need:
                return False
            if self.constrained and tags + (reach & self.tagmask).bit_count() < self.min_tags:
                return False
        child_avail = avail & ~self.adj[tail]
        cands = []
        m = ext
        while m:
            b = m & -m
            cands.append(b.bit_length() - 1)
            m ^= b
        if self.twins and len(cands) > 1:
            cands = self._representatives(cands, avail | 1 << tail)
        tagmask = self.tagmask
        for v in cands:
            self.path.append(v)
            abort = self._extend(v, child_avail & ~(1 << v), tags + (tagmask >> v & 1))
            self.path.pop()
            if abort:
                return True
        return False

    def run(self) -> None:
        full = (1 << self.n) - 1
        starts = sorted(range(self.n), key=lambda v: (self.g.degree(v), v))
        if self.twins and self.n > 1:
            starts = self._representatives(starts, full)
        for v in starts:
            self.path.append(v)
            abort = self._extend(v, full & ~(1 << v), self.tagmask >> v & 1)
            self.path.pop()
            if abort:
                return


def has_induced_path(q: PathQuery) -> SearchReport:
    """Exact decision for PathQuery; "exhausted-no" certifies nonexistence."""
    g = q.graph
    if not 1 <= q.target <= g.n:
        raise GraphError(f"target {q.target} outside 1..{g.n}")
    tag_kind, min_tags = q.tag_at_least if q.tag_at_least else (None, 0)
    if min_tags < 0:
        raise GraphError("tag count must be >= 0")
    eng = _Engine(g, q.target, tag_kind, min_tags, q.budget)
    eng.run()
    wall = eng.clock.elapsed()
    if eng.found is not None:
        reason = validate_induced_path(g, eng.found, tag_kind, min_tags)
        if reason is not None or len(eng.found) != q.target:
            raise RuntimeError(f"solver produced an invalid witness: {reason}")
        return SearchReport(FOUND, eng.found, eng.clock.nodes, wall, eng.best_order)
    if eng.clock.exhausted:
        return SearchReport(BUDGET_EXHAUSTED, None, eng.clock.nodes, wall, eng.best_order)
    return SearchReport(EXHAUSTED_NO, None, eng.clock.nodes, wall, eng.best_order)


def longest_induced_path(g: LabeledGraph, budget: Budget = UNLIMITED) -> LongestReport:
    """Maximum order of an induced path, with witness; anytime under budget."""
    if g.n == 0:
        return LongestReport(EXHAUSTED, 0, None, 0, 0.0)
    eng = _Engine(g, None, None, 0, budget)
    eng.run()
    wall = eng.clock.elapsed()
    if eng.best_witness is not None:
        reason = validate_induced_path(g, eng.best_witness)
        if reason is not None:
            raise RuntimeError(f"solver produced an invalid witness: {reason}")
    status = BUDGET_EXHAUSTED if eng.clock.exhausted else EXHAUSTED
    return LongestReport(status, eng.best_order, eng.best_witness, eng.clock.nodes, wall)


def max_order_with_tag_count(
    g: LabeledGraph, kind: str, count: int, budget: Budget = UNLIMITED
) -> LongestReport:
    """Maximum order among induced paths containing at least `count` vertices
    of the given kind; `order` is None when no induced path qualifies."""
    if count < 0:
        raise GraphError("tag count must be >= 0")
    eng = _Engine(g, None, kind, count, budget)
    eng.run()
    wall = eng.clock.elapsed()
    order: Optional[int] = eng.best_order if eng.best_witness is not None else None
    if count == 0 and g.n == 0:
        order = 0
    if eng.best_witness is not None:
        reason = validate_induced_path(g, eng.best_witness, kind, count)
        if reason is not None:
            raise RuntimeError(f"solver produced an invalid witness: {reason}")
    status = BUDGET_EXHAUSTED if eng.clock.exhausted else EXHAUSTED
    return LongestReport(status, order, eng.best_witness, eng.clock.nodes, wall)


def naive_enumerate(g: LabeledGraph, t: int) -> bool:
    """Unpruned depth-first enumeration of induced paths; the independent
    oracle for the engine above. Guarded to |V| <= 20."""
    if g.n > 20:
        raise GraphError(f"naive enumeration guarded to 20 vertices, got {g.n}")
    if not 1 <= t <= g.n:
        raise GraphError(f"target {t} outside 1..{g.n}")
    adj = g.adj
    path: list[int] = []
    on_path: set[int] = set()

    def grow(tail: int) -> bool:
        if len(path) == t:
            return True
        for v in range(g.n):
            if v in on_path or v not in adj[tail]:
                continue
            if any(v in adj[u] for u in path[:-1]):
                continue
            path.append(v)
            on_path.add(v)
            if grow(v):
                return True
            path.pop()
            on_path.remove(v)
        return False

    for start in range(g.n):
        path[:] = [start]
        on_path = {start}
        if grow(start):
            return True
    return False
