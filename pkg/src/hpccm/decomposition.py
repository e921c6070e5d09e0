"""Median edges, maximal st-polygons and the polygon decomposition.

An st-polygon is a sub-digraph shaped like a triangulated strip with an
interior edge (its median) running from its source to its sink.  An edge
is the median of some st-polygon exactly when the faces on both of its
sides are interior triangles carrying the transitive orientation
(u -> w -> v over the edge (u, v)); that is an O(1) test per edge once
clockwise-predecessor tables are in place.

Each median determines a unique inclusion-maximal polygon; the strip is
bounded below by a limiting edge at the source (the most clockwise /
counterclockwise outgoing edge, depending on the source's side) and above
by one at the sink.  Maximal polygons of one graph are pairwise
area-disjoint and, ordered by the topological rank of their sources
(free vertices represent themselves), form a total order: the
decomposition the dynamic program runs over.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .graph_model import (
    DirectedEdge,
    GraphError,
    OTStDigraph,
    VertexId,
)


class StPolygon(NamedTuple):
    """Maximal st-polygon of an OT-st-digraph.

    Chains are the polygon's own boundary chains bottom-to-top, excluding
    ``source`` and ``sink``.  Junction vertices shared with a neighbouring
    polygon are included in the chain they lie on.  The ``*_adj_*`` tuples
    flag, per chain vertex, adjacency to the polygon's source/sink; they
    feed the crossing-cost formula.
    """

    source: VertexId
    sink: VertexId
    median: DirectedEdge
    left_chain: tuple[VertexId, ...]
    right_chain: tuple[VertexId, ...]
    lower_limit: Optional[DirectedEdge]
    upper_limit: Optional[DirectedEdge]
    sink_side: str  # side of the sink on the graph's global chains: L, R or T
    src_adj_left: tuple[bool, ...]
    src_adj_right: tuple[bool, ...]
    sink_adj_left: tuple[bool, ...]
    sink_adj_right: tuple[bool, ...]

    def vertices(self) -> tuple[VertexId, ...]:
        return (self.source, *self.left_chain, *self.right_chain, self.sink)

    @property
    def size(self) -> int:
        return 2 + len(self.left_chain) + len(self.right_chain)


class FreeVertex(NamedTuple):
    vertex: VertexId


DecompositionElement = Union[StPolygon, FreeVertex]


@dataclass(frozen=True)
class Decomposition:
    """Total order of maximal st-polygons and free vertices."""

    elements: tuple[DecompositionElement, ...]
    shared: tuple[int, ...]

    @property
    def polygon_count(self) -> int:
        return sum(1 for e in self.elements if isinstance(e, StPolygon))


class _Tables:
    """Per-graph O(1)-lookup tables for median tests and polygon extraction.

    Edges are keyed as packed integers (tail * n + head); ``elist``
    enumerates them deterministically in rotation-sweep order.
    """

    __slots__ = (
        "n",
        "ekeys",
        "elist",
        "pred_at_head",
        "pred_at_tail",
        "out_adjacency",
        "outer_keys",
        "first_out",
        "last_out",
        "first_in",
        "last_in",
    )

    def __init__(self, g: OTStDigraph):
        base = g.base
        n = base.n
        self.n = n
        ekeys = {u * n + v for (u, v) in base.edges}
        self.ekeys = ekeys
        # One sweep over the rotations classifies each slot as in or out,
        # collects the edge list, the out-adjacency, the in/out block
        # boundaries, and the clockwise predecessor on both sides of every
        # edge (the third vertices of the flanking faces whenever those
        # faces are triangles).
        elist: list[DirectedEdge] = []
        pred_head: dict[int, VertexId] = {}
        pred_tail: dict[int, VertexId] = {}
        out_adjacency: list[list[VertexId]] = [[] for _ in range(n)]
        first_out: list[Optional[int]] = [None] * n
        last_out: list[Optional[int]] = [None] * n
        first_in: list[Optional[int]] = [None] * n
        last_in: list[Optional[int]] = [None] * n
        for c in range(n):
            rot = base.rotation[c]
            base_key = c * n
            prev = rot[-1]
            prev_out = (base_key + prev) in ekeys
            out_list = out_adjacency[c]
            for w in rot:
                if (base_key + w) in ekeys:
                    elist.append((c, w))
                    out_list.append(w)
                    pred_tail[base_key + w] = prev
                    if not prev_out:
                        first_out[c] = w
                        last_in[c] = prev
                    cur_out = True
                else:
                    pred_head[w * n + c] = prev
                    if prev_out:
                        first_in[c] = w
                        last_out[c] = prev
                    cur_out = False
                prev = w
                prev_out = cur_out
        for c in range(n):
            rot = base.rotation[c]
            if first_out[c] is None and out_adjacency[c]:
                first_out[c], last_out[c] = rot[0], rot[-1]
            if first_in[c] is None and not out_adjacency[c]:
                first_in[c], last_in[c] = rot[0], rot[-1]
        self.elist = elist
        self.pred_at_head = pred_head
        self.pred_at_tail = pred_tail
        self.out_adjacency = out_adjacency
        self.first_out = first_out
        self.last_out = last_out
        self.first_in = first_in
        self.last_in = last_in

        # Outer boundary darts, assembled straight from the chains.
        s, t = base.s, base.t
        right_path = [s, *g.right, t]
        left_path = [s, *g.left, t]
        outer = [a * n + b for a, b in zip(right_path, right_path[1:])] + [
            b * n + a for a, b in zip(left_path, left_path[1:])
        ]
        self.outer_keys = set(outer)


def _tables(g: OTStDigraph) -> _Tables:
    tb = g.__dict__.get("_median_tables")
    if tb is None:
        tb = _Tables(g)
        g.__dict__["_median_tables"] = tb
    return tb


def is_median(g: OTStDigraph, e: DirectedEdge) -> bool:
    """Whether ``e`` is the median of some st-polygon of ``g``.

    True exactly when both faces flanking ``e`` are interior triangles
    whose third vertex w carries the transitive orientation u->w->v.
    O(1) per call after an O(n) per-graph precomputation.
    """
    tb = _tables(g)
    u, v = e
    n = tb.n
    key = u * n + v
    if key not in tb.ekeys:
        raise GraphError("unknown-edge", f"edge {e} is not in the graph")
    return _is_median_key(tb, u, v, key)


def _is_median_key(tb: _Tables, u: VertexId, v: VertexId, key: int) -> bool:
    if key in tb.outer_keys or (v * tb.n + u) in tb.outer_keys:
        return False
    n = tb.n
    ekeys = tb.ekeys
    w = tb.pred_at_head[key]
    if (u * n + w) not in ekeys or (w * n + v) not in ekeys:
        return False
    w = tb.pred_at_tail[key]
    return (u * n + w) in ekeys and (w * n + v) in ekeys


def maximal_polygon(g: OTStDigraph, median: DirectedEdge) -> StPolygon:
    """The inclusion-maximal st-polygon with the given median edge.

    The polygon spans the strip between its limiting edges: at a left-chain
    source the lower limit is the last clockwise outgoing edge (the
    two-sided edge reaching lowest on the right), mirrored for the other
    cases; a source at s / sink at t extends the strip to the graph's
    bottom / top.
    """
    if not is_median(g, median):
        raise GraphError("not-a-median", f"edge {median} is not a median edge")
    return _extract_polygon(g, _tables(g), median)


def _extract_polygon(
    g: OTStDigraph, tb: _Tables, median: DirectedEdge
) -> StPolygon:
    side, pos = g.side, g.chain_pos
    u, v = median
    k, m = len(g.left), len(g.right)
    lower: Optional[DirectedEdge] = None
    upper: Optional[DirectedEdge] = None
    if side[u] == "S":
        lo_l, lo_r = 1, 1
    elif side[u] == "L":
        head = tb.last_out[u]
        lower = (u, head)
        lo_l, lo_r = pos[u] + 1, pos[head]
    else:
        head = tb.first_out[u]
        lower = (u, head)
        lo_r, lo_l = pos[u] + 1, pos[head]
    if side[v] == "T":
        hi_l, hi_r = k, m
    elif side[v] == "L":
        tail = tb.first_in[v]
        upper = (tail, v)
        hi_l, hi_r = pos[v] - 1, pos[tail]
    else:
        tail = tb.last_in[v]
        upper = (tail, v)
        hi_r, hi_l = pos[v] - 1, pos[tail]
    if lower is not None and side[lower[1]] == side[u]:
        raise GraphError(
            "internal", f"lower limiting edge {lower} is not two-sided"
        )
    if upper is not None and side[upper[0]] == side[v]:
        raise GraphError(
            "internal", f"upper limiting edge {upper} is not two-sided"
        )
    left_chain = g.left[lo_l - 1 : hi_l]
    right_chain = g.right[lo_r - 1 : hi_r]
    if not left_chain or not right_chain:
        raise GraphError("internal", f"degenerate polygon for median {median}")
    n = tb.n
    ekeys = tb.ekeys
    ubase = u * n
    return StPolygon(
        source=u,
        sink=v,
        median=median,
        left_chain=left_chain,
        right_chain=right_chain,
        lower_limit=lower,
        upper_limit=upper,
        sink_side=side[v],
        src_adj_left=tuple((ubase + x) in ekeys for x in left_chain),
        src_adj_right=tuple((ubase + x) in ekeys for x in right_chain),
        sink_adj_left=tuple((x * n + v) in ekeys for x in left_chain),
        sink_adj_right=tuple((x * n + v) in ekeys for x in right_chain),
    )


def _topological_rank(g: OTStDigraph, tb: _Tables) -> list[int]:
    base = g.base
    n = base.n
    indeg = [0] * n
    out_adjacency = tb.out_adjacency
    for nbrs in out_adjacency:
        for w in nbrs:
            indeg[w] += 1
    stack = [base.s]
    rank = [0] * n
    nxt = 0
    while stack:
        v = stack.pop()
        rank[v] = nxt
        nxt += 1
        for w in out_adjacency[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if nxt != n:
        raise GraphError("cyclic", "graph contains a directed cycle")
    return rank


def _shared_count(a: DecompositionElement, b: DecompositionElement) -> int:
    if not (isinstance(a, StPolygon) and isinstance(b, StPolygon)):
        return 0
    if a.upper_limit is not None and a.upper_limit == b.lower_limit:
        return 2
    if a.sink == b.source:
        return 1
    return 0


def decompose(g: OTStDigraph) -> Decomposition:
    """The st-polygon decomposition: maximal polygons plus free vertices,
    totally ordered by the topological rank of their representatives
    (a polygon's source; a free vertex itself)."""
    tb = _tables(g)
    n = tb.n
    polys = [
        _extract_polygon(g, tb, (u, v))
        for (u, v) in tb.elist
        if _is_median_key(tb, u, v, u * n + v)
    ]
    covered = [False] * n
    for p in polys:
        covered[p.source] = True
        covered[p.sink] = True
        for x in p.left_chain:
            covered[x] = True
        for x in p.right_chain:
            covered[x] = True
    rank = _topological_rank(g, tb)
    elements: list[DecompositionElement] = list(polys)
    elements += [FreeVertex(v) for v in range(n) if not covered[v]]

    def representative(el: DecompositionElement) -> VertexId:
        return el.source if isinstance(el, StPolygon) else el.vertex

    reps = [representative(el) for el in elements]
    if len(set(reps)) != len(reps):
        raise GraphError("internal", "decomposition representatives collide")
    elements.sort(key=lambda el: rank[representative(el)])
    shared = tuple(_shared_count(a, b) for a, b in zip(elements, elements[1:]))
    return Decomposition(elements=tuple(elements), shared=shared)
