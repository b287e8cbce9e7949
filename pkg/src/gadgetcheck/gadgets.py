"""Monotone NAE-3-SAT instances and the reduction graph built from them.

An instance is a set of 3-element all-positive clauses; it is satisfiable
when some assignment leaves every clause with at least one true and at least
one false variable. The reduction attaches, per clause, two 8-vertex clause
gadgets (one per variant) to the shared 22-vertex synchronization connector,
plus one vertex per variable wired so that, under the connector's forced
coloring, variable vertices behave as booleans.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import GraphError, LabeledGraph, VertexTag, build_graph
from .mycielski import build_m_prime

NAE_VAR_LIMIT = 24

# Clause gadget on 8 vertices in declaration order a0,b0,a1,b1,a2,c0,c1,c2:
# the a/b vertices form a 5-vertex path and each c hangs off its a.
GADGET_ROLES = ("a0", "b0", "a1", "b1", "a2", "c0", "c1", "c2")
GADGET_INTERNAL_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (2, 6), (4, 7))
A_POSITIONS = (0, 2, 4)
B_POSITIONS = (1, 3)
C_POSITIONS = (5, 6, 7)

# Neighborhood in the primary connector quadruple per variant and a-position;
# together these six distinct neighborhoods classify the six a/c-pair types.
A_ATTACHMENTS = {
    0: {0: (0, 2), 2: (0,), 4: (0, 3)},
    1: {0: (1, 2), 2: (1,), 4: (1, 3)},
}

AC_PAIR_TYPES = tuple((eps, pos) for eps in (0, 1) for pos in A_POSITIONS)


@dataclass(frozen=True)
class MnaeInstance:
    """num_vars variables indexed from 0; each clause is a sorted triple of
    distinct variable indices."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise GraphError("negative variable count")
        for clause in self.clauses:
            if len(clause) != 3 or len(set(clause)) != 3:
                raise GraphError(f"clause {clause} must have 3 distinct variables")
            for v in clause:
                if not 0 <= v < self.num_vars:
                    raise GraphError(f"variable {v} out of range 0..{self.num_vars - 1}")
            if tuple(sorted(clause)) != clause:
                raise GraphError(f"clause {clause} not sorted")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def make_instance(num_vars: int, clauses) -> MnaeInstance:
    return MnaeInstance(num_vars, tuple(tuple(sorted(c)) for c in clauses))


class MnaeFormatError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_mnae(text: str) -> MnaeInstance:
    """Parse the ".mnae" format: header "mnae <num_vars> <num_clauses>", one
    clause per line as three distinct indices; "#" starts a comment."""
    lines = text.splitlines()
    header = None
    clauses: list[tuple[int, int, int]] = []
    num_vars = 0
    expected = 0
    for line_no, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if header is None:
            if fields[0] != "mnae" or len(fields) != 3:
                raise MnaeFormatError(line_no, f"expected 'mnae <vars> <clauses>', got {body!r}")
            try:
                num_vars, expected = int(fields[1]), int(fields[2])
            except ValueError:
                raise MnaeFormatError(line_no, f"non-integer header counts in {body!r}") from None
            if num_vars < 0 or expected < 0:
                raise MnaeFormatError(line_no, "negative counts in header")
            header = (num_vars, expected)
            continue
        if len(fields) != 3:
            raise MnaeFormatError(line_no, f"clause needs exactly 3 variables, got {len(fields)}")
        try:
            triple = tuple(int(f) for f in fields)
        except ValueError:
            raise MnaeFormatError(line_no, f"non-integer variable in {body!r}") from None
        if len(set(triple)) != 3:
            raise MnaeFormatError(line_no, f"repeated variable in clause {body!r}")
        for v in triple:
            if not 0 <= v < num_vars:
                raise MnaeFormatError(line_no, f"variable {v} out of range 0..{num_vars - 1}")
        clauses.append(tuple(sorted(triple)))
    if header is None:
        raise MnaeFormatError(1, "missing 'mnae' header")
    if len(clauses) != expected:
        raise MnaeFormatError(len(lines) or 1, f"header claims {expected} clauses, found {len(clauses)}")
    return MnaeInstance(num_vars, tuple(clauses))


def write_mnae(inst: MnaeInstance) -> str:
    lines = [f"mnae {inst.num_vars} {inst.num_clauses}"]
    lines.extend(" ".join(str(v) for v in clause) for clause in inst.clauses)
    return "\n".join(lines) + "\n"


def nae_satisfiable(inst: MnaeInstance) -> tuple[bool, Optional[tuple[bool, ...]]]:
    """Brute-force scan of all 2^n assignments; the ground-truth side of the
    end-to-end harness. Returns the lexicographically first witness."""
    n = inst.num_vars
    if n > NAE_VAR_LIMIT:
        raise GraphError(f"brute force guarded to {NAE_VAR_LIMIT} variables, got {n}")
    clause_masks = [sum(1 << v for v in clause) for clause in inst.clauses]
    for assignment in range(1 << n):
        if all(0 < assignment & cm < cm for cm in clause_masks):
            return True, tuple(bool(assignment >> i & 1) for i in range(n))
    return False, None


def x_vertex(i: int) -> int:
    """Vertex id of variable i in a reduction graph (connector occupies 0..21)."""
    return 22 + i


def build_reduction(inst: MnaeInstance) -> LabeledGraph:
    """The reduction graph: connector at ids 0..21, one x-type vertex per
    variable, then per clause the variant-0 and variant-1 gadgets, each in
    declaration order a0,b0,a1,b1,a2,c0,c1,c2.

    Wiring: every x vertex sees t2 and t3; b-type vertices see every x vertex
    and t0',t1'; c-type vertices see t2',t3' and their clause variable; a-type
    vertices see their variant's neighborhood in the primary quadruple.
    """
    gadget = build_m_prime()
    t = gadget.quad_i
    tp = gadget.quad_i_prime
    n = inst.num_vars
    total = 22 + n + 16 * inst.num_clauses

    tags = list(gadget.graph.tags)
    tags.extend(VertexTag(kind="x") for _ in range(n))
    edges = list(gadget.graph.edges)

    xs = [x_vertex(i) for i in range(n)]
    for x in xs:
        edges.append((x, t[2]))
        edges.append((x, t[3]))

    next_id = 22 + n
    for clause_idx, clause in enumerate(inst.clauses):
        for eps in (0, 1):
            base = next_id
            next_id += 8
            for pos, role in enumerate(GADGET_ROLES):
                tags.append(VertexTag(kind=role[0], provenance=(clause_idx, eps, pos)))
            for u, v in GADGET_INTERNAL_EDGES:
                edges.append((base + u, base + v))
            for pos, t_indices in A_ATTACHMENTS[eps].items():
                for ti in t_indices:
                    edges.append((base + pos, t[ti]))
            for pos in B_POSITIONS:
                edges.append((base + pos, tp[0]))
                edges.append((base + pos, tp[1]))
                for x in xs:
                    edges.append((base + pos, x))
            for h, pos in enumerate(C_POSITIONS):
                edges.append((base + pos, tp[2]))
                edges.append((base + pos, tp[3]))
                edges.append((base + pos, x_vertex(clause[h])))

    assert next_id == total
    return build_graph(total, edges, tuple(tags))
