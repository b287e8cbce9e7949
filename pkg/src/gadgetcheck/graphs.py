"""Undirected labeled graphs, basic queries, and the line-oriented ".graph" format.

Everything downstream (gadget builders, coloring solver, induced-path solver)
works on the immutable :class:`LabeledGraph`. Vertices are contiguous ids
0..n-1, each carrying a :class:`VertexTag` that records its semantic role.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

KINDS = ("plain", "mycielski", "x", "a", "b", "c")

# connector token <-> (set, index); "ip" marks membership in the primed quadruple
_CONNECTOR_TOKENS = {f"i{i}": ("I", i) for i in range(4)}
_CONNECTOR_TOKENS.update({f"ip{i}": ("I'", i) for i in range(4)})
_CONNECTOR_NAMES = {v: k for k, v in _CONNECTOR_TOKENS.items()}


class GraphError(ValueError):
    """Invalid graph construction or query."""


class GraphFormatError(GraphError):
    """Malformed ".graph" text; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class VertexTag:
    """Semantic role of a vertex.

    connector: ("I", idx) or ("I'", idx) with idx in 0..3; only meaningful on
    kind="mycielski" vertices.
    provenance: (clause_or_copy_index, variant, position) for gadget vertices,
    position indexing the declaration order a0,b0,a1,b1,a2,c0,c1,c2.
    """

    kind: str = "plain"
    connector: Optional[tuple[str, int]] = None
    provenance: Optional[tuple[int, int, int]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown vertex kind {self.kind!r}")
        if self.connector is not None:
            if self.kind != "mycielski":
                raise GraphError(f"kind {self.kind!r} must not carry a connector index")
            if self.connector not in _CONNECTOR_NAMES:
                raise GraphError(f"bad connector {self.connector!r}")
        if self.provenance is not None:
            clause, eps, pos = self.provenance
            if eps not in (0, 1) or not 0 <= pos < 8 or clause < 0:
                raise GraphError(f"bad provenance {self.provenance!r}")


PLAIN = VertexTag()


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph with contiguous vertex ids and per-vertex tags.

    Immutable once built; share freely across workers. Use :func:`build_graph`
    (or a builder module) instead of calling the constructor directly.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    tags: tuple[VertexTag, ...]
    adj: tuple[frozenset[int], ...] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def connector_vertex(self, which: str, idx: int) -> int:
        """Id of the vertex tagged with connector (which, idx); raises if absent."""
        for v, tag in enumerate(self.tags):
            if tag.connector == (which, idx):
                return v
        raise GraphError(f"no vertex tagged connector ({which!r}, {idx})")


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    tags: Optional[Sequence[VertexTag]] = None,
) -> LabeledGraph:
    """Normalize and validate a vertex/edge description into a LabeledGraph.

    Edges are deduplicated, stored with u < v and sorted ascending, so equal
    graphs compare equal regardless of input order. Tags default to "plain".
    """
    if n < 0:
        raise GraphError("negative vertex count")
    if tags is None:
        tags = tuple(PLAIN for _ in range(n))
    else:
        tags = tuple(tags)
    if len(tags) != n:
        raise GraphError(f"expected {n} tags, got {len(tags)}")
    seen_connectors: set[tuple[str, int]] = set()
    for tag in tags:
        if tag.connector is not None:
            if tag.connector in seen_connectors:
                raise GraphError(f"duplicate connector tag {tag.connector!r}")
            seen_connectors.add(tag.connector)
    norm: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range 0..{n - 1}")
        norm.add((u, v) if u < v else (v, u))
    edge_tuple = tuple(sorted(norm))
    neigh: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_tuple:
        neigh[u].add(v)
        neigh[v].add(u)
    return LabeledGraph(n=n, edges=edge_tuple, tags=tags, adj=tuple(frozenset(s) for s in neigh))


def add_edge(g: LabeledGraph, u: int, v: int) -> LabeledGraph:
    """Return g with edge {u,v} added (idempotent). Rejects self-loops and bad ids."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge ({u},{v}) out of range 0..{g.n - 1}")
    if g.has_edge(u, v):
        return g
    return build_graph(g.n, g.edges + ((u, v),), g.tags)


def delete_edge(g: LabeledGraph, u: int, v: int) -> LabeledGraph:
    """Return g with edge {u,v} removed; raises if the edge is absent."""
    key = (u, v) if u < v else (v, u)
    if key not in g.edges:
        raise GraphError(f"edge {key} not present")
    return build_graph(g.n, tuple(e for e in g.edges if e != key), g.tags)


def is_triangle_free(g: LabeledGraph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Exhaustive triangle check over the edges; O(m * Delta).

    Returns (True, None) or (False, witness_triple).
    """
    for u, v in g.edges:
        common = g.adj[u] & g.adj[v]
        if common:
            return False, (u, v, min(common))
    return True, None


def induced_subgraph(g: LabeledGraph, s: Iterable[int]) -> tuple[LabeledGraph, tuple[int, ...]]:
    """Subgraph induced on vertex set s, plus the order-preserving id remap.

    The remap is a tuple where remap[new_id] = old_id; tags carry over.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    index = {old: new for new, old in enumerate(keep)}
    keep_set = set(keep)
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in keep_set and v in keep_set
    ]
    sub = build_graph(len(keep), edges, tuple(g.tags[v] for v in keep))
    return sub, tuple(keep)


def contract_vertices(g: LabeledGraph, u: int, v: int) -> LabeledGraph:
    """Identify v into u: the merged vertex keeps u's tag and inherits both
    neighborhoods. Only defined for non-adjacent u, v (no self-loop arises).

    A proper coloring of the result pulls back to a proper coloring of g in
    which u and v share a color, so non-colorability of the contraction
    certifies "u and v are colored differently in every coloring of g".
    """
    if u == v:
        raise GraphError("cannot contract a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"pair ({u},{v}) out of range 0..{g.n - 1}")
    if g.has_edge(u, v):
        raise GraphError(f"cannot contract adjacent vertices ({u},{v})")
    remap = {}
    for w in range(g.n):
        if w == v:
            continue
        remap[w] = w if w < v else w - 1
    remap[v] = remap[u]
    edges = {tuple(sorted((remap[a], remap[b]))) for a, b in g.edges}
    tags = tuple(g.tags[w] for w in range(g.n) if w != v)
    return build_graph(g.n - 1, edges, tags)


def adjacency_masks(g: LabeledGraph) -> list[int]:
    """Per-vertex neighborhoods as bitmasks; the solvers' working representation."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _format_tag(tag: VertexTag) -> str:
    parts = [tag.kind]
    if tag.connector is not None:
        parts.append(_CONNECTOR_NAMES[tag.connector])
    if tag.provenance is not None:
        parts.extend(str(x) for x in tag.provenance)
    return " ".join(parts)


def write_graph(g: LabeledGraph) -> str:
    """Serialize to the ".graph" text format.

    Layout: "graph <n> <m>", one "v <id> <kind>[ <connector>][ <clause> <eps> <pos>]"
    line per vertex, then "e <u> <v>" lines with u < v sorted ascending.
    """
    lines = [f"graph {g.n} {g.m}"]
    for v in range(g.n):
        lines.append(f"v {v} {_format_tag(g.tags[v])}")
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def _parse_tag(fields: list[str], line_no: int) -> VertexTag:
    kind = fields[0]
    if kind not in KINDS:
        raise GraphFormatError(line_no, f"unknown vertex kind {kind!r}")
    rest = fields[1:]
    connector = None
    if rest and rest[0] in _CONNECTOR_TOKENS:
        connector = _CONNECTOR_TOKENS[rest[0]]
        rest = rest[1:]
    provenance = None
    if rest:
        if len(rest) != 3:
            raise GraphFormatError(line_no, f"tag provenance needs 3 fields, got {len(rest)}")
        try:
            provenance = (int(rest[0]), int(rest[1]), int(rest[2]))
        except ValueError:
            raise GraphFormatError(line_no, f"non-integer provenance {rest!r}") from None
    try:
        return VertexTag(kind=kind, connector=connector, provenance=provenance)
    except GraphError as exc:
        raise GraphFormatError(line_no, str(exc)) from None


def read_graph(text: str) -> LabeledGraph:
    """Parse the ".graph" format; inverse of :func:`write_graph`.

    Errors carry line numbers; duplicate edges, self-loops, bad ids, and tag
    syntax problems are all rejected.
    """
    lines = text.splitlines()
    if not lines:
        raise GraphFormatError(1, "empty input")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "graph":
        raise GraphFormatError(1, f"expected 'graph <n> <m>', got {lines[0]!r}")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise GraphFormatError(1, f"non-integer counts in header {lines[0]!r}") from None
    tags: dict[int, VertexTag] = {}
    edges: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(lines[1:], start=2):
        fields = raw.split()
        if not fields:
            raise GraphFormatError(line_no, "blank line")
        if fields[0] == "v":
            if len(fields) < 3:
                raise GraphFormatError(line_no, f"vertex line needs id and kind: {raw!r}")
            try:
                vid = int(fields[1])
            except ValueError:
                raise GraphFormatError(line_no, f"non-integer vertex id {fields[1]!r}") from None
            if not 0 <= vid < n:
                raise GraphFormatError(line_no, f"vertex id {vid} out of range 0..{n - 1}")
            if vid in tags:
                raise GraphFormatError(line_no, f"duplicate vertex {vid}")
            tags[vid] = _parse_tag(fields[2:], line_no)
        elif fields[0] == "e":
            if len(fields) != 3:
                raise GraphFormatError(line_no, f"edge line needs two endpoints: {raw!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(line_no, f"non-integer edge endpoint in {raw!r}") from None
            if u == v:
                raise GraphFormatError(line_no, f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(line_no, f"edge ({u},{v}) out of range 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                raise GraphFormatError(line_no, f"duplicate edge ({u},{v})")
            edge_set.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(line_no, f"unknown record type {fields[0]!r}")
    if len(tags) != n:
        missing = next(v for v in range(n) if v not in tags)
        raise GraphFormatError(len(lines), f"missing vertex line for id {missing}")
    if len(edges) != m:
        raise GraphFormatError(len(lines), f"header claims {m} edges, found {len(edges)}")
    return build_graph(n, edges, tuple(tags[v] for v in range(n)))


def read_graph_file(path) -> LabeledGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_graph(fh.read())


def write_graph_file(g: LabeledGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g))
