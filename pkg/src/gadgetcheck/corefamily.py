"""The nine fixed gadget graphs whose induced-path bound the toolkit checks.

Six of them attach five full clause gadgets to the bare connector (varying
the variant split); the other three add one or two variable vertices with
prescribed mixtures of full gadgets, detached a/c-pairs, and - in one case -
a lone b-type vertex. Every graph keeps the connector at ids 0..21 and wires
gadget vertices exactly as the reduction does, so any induced path realized
here uses the same adjacencies it would have in a reduction graph.
"""

from __future__ import annotations

from .gadgets import (
    AC_PAIR_TYPES,
    A_ATTACHMENTS,
    A_POSITIONS,
    B_POSITIONS,
    C_POSITIONS,
    GADGET_INTERNAL_EDGES,
    GADGET_ROLES,
)
from .graphs import GraphError, LabeledGraph, VertexTag, build_graph
from .mycielski import build_m_prime
from .snake import validate_induced_path

CORE_GRAPH_IDS = ("g0_0", "g0_1", "g0_2", "g0_3", "g0_4", "g0_5", "g1", "g2", "g3")

# role position of the c partner of the a at each a-position
_C_PARTNER = {0: 5, 2: 6, 4: 7}


class _CoreBuilder:
    def __init__(self, num_x: int):
        gadget = build_m_prime()
        self.t = gadget.quad_i
        self.tp = gadget.quad_i_prime
        self.tags = list(gadget.graph.tags)
        self.edges = list(gadget.graph.edges)
        self.xs = [22 + i for i in range(num_x)]
        for x in self.xs:
            self.tags.append(VertexTag(kind="x"))
            self.edges.append((x, self.t[2]))
            self.edges.append((x, self.t[3]))
        self.next_id = 22 + num_x

    def _vertex(self, kind: str, copy_idx: int, eps: int, pos: int) -> int:
        vid = self.next_id
        self.next_id += 1
        self.tags.append(VertexTag(kind=kind, provenance=(copy_idx, eps, pos)))
        return vid

    def _attach_a(self, a: int, eps: int, pos: int) -> None:
        for ti in A_ATTACHMENTS[eps][pos]:
            self.edges.append((a, self.t[ti]))

    def _attach_c(self, c: int) -> None:
        self.edges.append((c, self.tp[2]))
        self.edges.append((c, self.tp[3]))

    def full_gadget(self, copy_idx: int, eps: int, b_sees: list[int]) -> int:
        """All eight gadget vertices; b-type vertices additionally see the
        given x vertices. c-type vertices get no x neighbor here."""
        base = self.next_id
        for pos, role in enumerate(GADGET_ROLES):
            self._vertex(role[0], copy_idx, eps, pos)
        for u, v in GADGET_INTERNAL_EDGES:
            self.edges.append((base + u, base + v))
        for pos in A_POSITIONS:
            self._attach_a(base + pos, eps, pos)
        for pos in B_POSITIONS:
            self.edges.append((base + pos, self.tp[0]))
            self.edges.append((base + pos, self.tp[1]))
            for x in b_sees:
                self.edges.append((base + pos, x))
        for pos in C_POSITIONS:
            self._attach_c(base + pos)
        return base

    def bless_gadget(self, copy_idx: int, eps: int) -> int:
        """Gadget minus its b-type vertices: three detached a/c-pairs whose
        c vertices have no x neighbor."""
        base = self.next_id
        for pos in A_POSITIONS:
            self._vertex("a", copy_idx, eps, pos)
        for pos in C_POSITIONS:
            self._vertex("c", copy_idx, eps, pos)
        for i, a_pos in enumerate(A_POSITIONS):
            self.edges.append((base + i, base + 3 + i))
            self._attach_a(base + i, eps, a_pos)
            self._attach_c(base + 3 + i)
        return base

    def ac_pair(self, copy_idx: int, eps: int, a_pos: int, x: int) -> int:
        """One a/c-pair whose c vertex is attached to the given x vertex."""
        a = self._vertex("a", copy_idx, eps, a_pos)
        c = self._vertex("c", copy_idx, eps, _C_PARTNER[a_pos])
        self.edges.append((a, c))
        self._attach_a(a, eps, a_pos)
        self._attach_c(c)
        self.edges.append((c, x))
        return a

    def lone_b(self, sees: list[int]) -> int:
        vid = self.next_id
        self.next_id += 1
        self.tags.append(VertexTag(kind="b"))
        self.edges.append((vid, self.tp[0]))
        self.edges.append((vid, self.tp[1]))
        for x in sees:
            self.edges.append((vid, x))
        return vid

    def finish(self) -> LabeledGraph:
        return build_graph(self.next_id, self.edges, tuple(self.tags))


def build_core(core_id: str) -> LabeledGraph:
    """Deterministic construction of one of the nine fixed graphs."""
    if core_id not in CORE_GRAPH_IDS:
        raise GraphError(f"unknown core graph id {core_id!r}; expected one of {CORE_GRAPH_IDS}")
    if core_id.startswith("g0_"):
        variant0_count = int(core_id[3:])
        b = _CoreBuilder(num_x=0)
        for copy_idx in range(5):
            b.full_gadget(copy_idx, 0 if copy_idx < variant0_count else 1, [])
        return b.finish()
    if core_id == "g1":
        b = _CoreBuilder(num_x=1)
        v = b.xs[0]
        for copy_idx, (eps, a_pos) in enumerate(AC_PAIR_TYPES):
            b.ac_pair(copy_idx, eps, a_pos, v)
        b.full_gadget(6, 0, [v])
        b.full_gadget(7, 1, [v])
        for i in range(8):
            b.bless_gadget(8 + i, 0 if i < 4 else 1)
        return b.finish()
    if core_id == "g2":
        b = _CoreBuilder(num_x=1)
        v = b.xs[0]
        for copy_idx, eps in enumerate((0, 0, 1, 1)):
            b.full_gadget(copy_idx, eps, [v])
        for i in range(8):
            b.bless_gadget(4 + i, 0 if i < 4 else 1)
        return b.finish()
    # g3: two x vertices, two a/c-pairs of each type per x, one shared b
    b = _CoreBuilder(num_x=2)
    copy_idx = 0
    for x in b.xs:
        for eps, a_pos in AC_PAIR_TYPES:
            for _ in range(2):
                b.ac_pair(copy_idx, eps, a_pos, x)
                copy_idx += 1
    b.lone_b(list(b.xs))
    for i in range(8):
        b.bless_gadget(copy_idx + i, 0 if i < 4 else 1)
    return b.finish()


def realize_witness_path(core_id: str) -> tuple[int, ...]:
    """Explicit 18-vertex induced path in a five-gadget core graph, following
    the pattern a,b,a,b,a,t3,a,b,a,b,a,c,t3',c,a,b,a,b over the first three
    gadget copies. Validated as induced before returning; raises on failure
    since that would mean the construction itself is broken.
    """
    if not core_id.startswith("g0_"):
        raise GraphError(f"witness path is defined for the g0_* graphs, not {core_id!r}")
    g = build_core(core_id)
    base = [22 + 8 * copy_idx for copy_idx in range(3)]
    t3 = 21
    t3p = 5
    seq = (
        base[0] + 0, base[0] + 1, base[0] + 2, base[0] + 3, base[0] + 4,
        t3,
        base[1] + 4, base[1] + 3, base[1] + 2, base[1] + 1, base[1] + 0, base[1] + 5,
        t3p,
        base[2] + 5, base[2] + 0, base[2] + 1, base[2] + 2, base[2] + 3,
    )
    reason = validate_induced_path(g, seq)
    if reason is not None:
        raise RuntimeError(f"witness path not induced in {core_id}: {reason}")
    return seq
