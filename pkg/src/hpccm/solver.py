"""Crossing-minimal acyclic hamiltonian-path completion for OT-st-digraphs.

Within a single st-polygon the completion set is always one edge: the
path walks one chain fully, jumps across (crossing the median, the chords
hanging off the sink on the walked side and the chords off the source on
the other) and walks the other chain.  Entering the polygon's sink from
the right therefore costs

    1 + #{left-chain chords into the sink} + #{source chords into the
    right chain}

and symmetrically from the left.  Over the whole decomposition a dynamic
program picks one entry side per polygon: free vertices and polygons
sharing at most one vertex just concatenate, while two polygons sharing a
limiting edge interact -- continuing on the chain of the shared sink
merges two completion edges into one that additionally crosses the shared
limiting edge (the "+1" junction case).

Reconstruction replays the chosen sides, splicing paths exactly as the
cost recurrences assume, and reports per completion edge the ordered list
of graph edges it crosses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional, Sequence

from .decomposition import (
    Decomposition,
    FreeVertex,
    StPolygon,
    decompose,
)
from .graph_model import DirectedEdge, GraphError, OTStDigraph, VertexId

Side = str  # 'L' or 'R'


class PolygonCosts(NamedTuple):
    """Crossing counts for the two entry sides of one polygon.

    ``edge_left``/``edge_right`` are the completion edges realizing each
    side when the polygon is solved in isolation.
    """

    cost_left: int
    cost_right: int
    edge_left: DirectedEdge
    edge_right: DirectedEdge


@dataclass(frozen=True)
class DpTable:
    cost_l: tuple[int, ...]
    cost_r: tuple[int, ...]
    back_l: tuple[Optional[Side], ...]
    back_r: tuple[Optional[Side], ...]

    @property
    def minimum(self) -> int:
        return min(self.cost_l[-1], self.cost_r[-1])

    @property
    def final_side(self) -> Side:
        return "L" if self.cost_l[-1] <= self.cost_r[-1] else "R"


@dataclass(frozen=True)
class HpCompletionResult:
    path: tuple[VertexId, ...]
    completion_edges: tuple[DirectedEdge, ...]
    crossings: tuple[tuple[DirectedEdge, ...], ...]
    total_crossings: int


def polygon_costs(p: StPolygon) -> PolygonCosts:
    """Entry-side costs of one polygon solved in isolation."""
    cost_left = 1 + sum(p.sink_adj_right[:-1]) + sum(p.src_adj_left[1:])
    cost_right = 1 + sum(p.sink_adj_left[:-1]) + sum(p.src_adj_right[1:])
    return PolygonCosts(
        cost_left=cost_left,
        cost_right=cost_right,
        edge_left=(p.right_chain[-1], p.left_chain[0]),
        edge_right=(p.left_chain[-1], p.right_chain[0]),
    )


def all_costs(d: Decomposition) -> tuple[Optional[PolygonCosts], ...]:
    """Per-element costs; None for free vertices (their cost is 0)."""
    return tuple(
        polygon_costs(el) if isinstance(el, StPolygon) else None
        for el in d.elements
    )


def crossed_edges(p: StPolygon, side: Side) -> tuple[DirectedEdge, ...]:
    """Graph edges crossed by the polygon's completion edge, ordered
    geometrically from its tail to its head.

    Walking from the tail, the edge first leaves the nested pockets formed
    by chords into the sink (nearest chord first), crosses the median, and
    then pierces the fan of chords out of the source (outermost first);
    within each group that is descending chain position.
    """
    if side == "L":
        walked, src_adj = p.right_chain, p.src_adj_left
        other, sink_adj = p.left_chain, p.sink_adj_right
    else:
        walked, src_adj = p.left_chain, p.src_adj_right
        other, sink_adj = p.right_chain, p.sink_adj_left
    out: list[DirectedEdge] = [
        (x, p.sink)
        for x, adj in zip(walked[-2::-1], sink_adj[-2::-1])
        if adj
    ]
    out.append(p.median)
    out.extend(
        (p.source, x)
        for x, adj in zip(other[:0:-1], src_adj[:0:-1])
        if adj
    )
    return tuple(out)


def dp_solve(
    d: Decomposition, costs: Sequence[Optional[PolygonCosts]]
) -> DpTable:
    """Minimum crossings per prefix and entry side, with backpointers.

    Free vertices and polygons sharing at most one vertex take the best
    predecessor side unconditionally; a polygon sharing a limiting edge
    pays one extra crossing when the path keeps entering on the side of
    the shared sink.  Ties prefer the left predecessor.
    """
    els = d.elements
    cl: list[int] = []
    cr: list[int] = []
    bl: list[Optional[Side]] = []
    br: list[Optional[Side]] = []
    for i, el in enumerate(els):
        free = isinstance(el, FreeVertex)
        c = costs[i]
        if not free and c is None:
            raise GraphError("internal", f"missing costs for element {i}")
        if i == 0:
            if free:
                cl.append(0)
                cr.append(0)
            else:
                cl.append(c.cost_left)
                cr.append(c.cost_right)
            bl.append(None)
            br.append(None)
            continue
        prev_l, prev_r = cl[-1], cr[-1]
        best_side: Side = "L" if prev_l <= prev_r else "R"
        best = min(prev_l, prev_r)
        if free:
            cl.append(best)
            cr.append(best)
            bl.append(best_side)
            br.append(best_side)
            continue
        if d.shared[i - 1] <= 1:
            cl.append(best + c.cost_left)
            cr.append(best + c.cost_right)
            bl.append(best_side)
            br.append(best_side)
            continue
        prev = els[i - 1]
        if not isinstance(prev, StPolygon):
            raise GraphError(
                "inconsistent-decomposition",
                f"element {i} shares two vertices with a non-polygon",
            )
        sink_side = prev.sink_side
        if sink_side not in ("L", "R"):
            raise GraphError(
                "inconsistent-decomposition",
                f"junction sink {prev.sink} is not on a boundary chain",
            )
        from_l_to_l = prev_l + c.cost_left + (1 if sink_side == "L" else 0)
        from_r_to_l = prev_r + c.cost_left
        cl.append(min(from_l_to_l, from_r_to_l))
        bl.append("L" if from_l_to_l <= from_r_to_l else "R")
        from_l_to_r = prev_l + c.cost_right
        from_r_to_r = prev_r + c.cost_right + (1 if sink_side == "R" else 0)
        cr.append(min(from_l_to_r, from_r_to_r))
        br.append("L" if from_l_to_r <= from_r_to_r else "R")
    return DpTable(
        cost_l=tuple(cl), cost_r=tuple(cr), back_l=tuple(bl), back_r=tuple(br)
    )


# ---------------------------------------------------------------------------
# Path construction shared by reconstruction and the exhaustive oracle.


class _Builder:
    """Assembles the hamiltonian path as runs separated by completion hops.

    A run is a maximal stretch of real graph edges.  Keeping runs separate
    makes the limiting-edge junction rewrite an O(1) splice: it inserts
    one run before the final one and replaces the last completion hop.
    """

    def __init__(self) -> None:
        self.runs: list[list[VertexId]] = []
        self.hops: list[Optional[tuple[DirectedEdge, tuple[DirectedEdge, ...]]]] = []

    def glue(self, vertices: Sequence[VertexId]) -> None:
        if not vertices:
            return
        if not self.runs:
            self.runs.append(list(vertices))
        else:
            self.runs[-1].extend(vertices)

    def hop(
        self, ce: DirectedEdge, crossed: tuple[DirectedEdge, ...], run: Sequence[VertexId]
    ) -> None:
        if not self.runs or self.runs[-1][-1] != ce[0]:
            raise GraphError("internal", f"completion edge {ce} detached from path")
        self.hops.append((ce, crossed))
        self.runs.append(list(run))
        if run[0] != ce[1]:
            raise GraphError("internal", f"completion edge {ce} detached from path")

    def last(self) -> VertexId:
        return self.runs[-1][-1]

    def pop_last(self) -> VertexId:
        return self.runs[-1].pop()

    def last_hop(self) -> tuple[DirectedEdge, tuple[DirectedEdge, ...]]:
        if not self.hops or self.hops[-1] is None:
            raise GraphError("internal", "expected a completion hop at the junction")
        return self.hops[-1]

    def splice_before_last(
        self,
        run: Sequence[VertexId],
        merged: tuple[DirectedEdge, tuple[DirectedEdge, ...]],
    ) -> None:
        self.runs.insert(len(self.runs) - 1, list(run))
        self.hops[-1] = merged
        self.hops.insert(len(self.hops) - 1, None)

    def result(self) -> tuple[
        tuple[VertexId, ...],
        tuple[DirectedEdge, ...],
        tuple[tuple[DirectedEdge, ...], ...],
    ]:
        path: list[VertexId] = []
        for run in self.runs:
            path.extend(run)
        ces = tuple(h[0] for h in self.hops if h is not None)
        crossings = tuple(h[1] for h in self.hops if h is not None)
        return tuple(path), ces, crossings


def _polygon_runs(p: StPolygon, side: Side) -> tuple[list[VertexId], list[VertexId]]:
    """First and second run of the polygon's stand-alone path."""
    if side == "L":
        return [p.source, *p.right_chain], [*p.left_chain, p.sink]
    return [p.source, *p.left_chain], [*p.right_chain, p.sink]


def construct_path(
    d: Decomposition,
    costs: Sequence[Optional[PolygonCosts]],
    sides: Sequence[Optional[Side]],
) -> tuple[
    tuple[VertexId, ...],
    tuple[DirectedEdge, ...],
    tuple[tuple[DirectedEdge, ...], ...],
]:
    """Build the full path for one choice of entry side per polygon.

    Used with DP-optimal sides by reconstruct() and with every side vector
    by the exhaustive oracle.
    """
    b = _Builder()
    prev_side: Optional[Side] = None
    for i, el in enumerate(d.elements):
        if isinstance(el, FreeVertex):
            b.glue([el.vertex])
            prev_side = None
            continue
        p = el
        side = sides[i]
        if side not in ("L", "R"):
            raise GraphError("internal", f"missing side for polygon element {i}")
        ce = costs[i].edge_left if side == "L" else costs[i].edge_right
        crossed = crossed_edges(p, side)
        shared = d.shared[i - 1] if i > 0 else 0
        if shared <= 1:
            first, second = _polygon_runs(p, side)
            if shared == 1:
                if b.last() != p.source:
                    raise GraphError("internal", "shared source not at path end")
                first = first[1:]
            b.glue(first)
            b.hop(ce, crossed, second)
            prev_side = side
            continue
        # Junction over a shared limiting edge (source, t_prev): t_prev is
        # the previous polygon's sink and the first vertex of one of this
        # polygon's chains.
        t_prev = p.lower_limit[1]
        near_is_left = bool(p.left_chain) and p.left_chain[0] == t_prev
        near, far = (
            (p.left_chain, p.right_chain)
            if near_is_left
            else (p.right_chain, p.left_chain)
        )
        near_side: Side = "L" if near_is_left else "R"
        if side != near_side:
            # Continue up the shared sink's own chain; the far chain is
            # reached by this polygon's plain completion edge.
            if b.last() != t_prev:
                raise GraphError("internal", "junction vertex not at path end")
            b.glue(near[1:])
            b.hop(ce, crossed, [*far, p.sink])
        elif prev_side != near_side:
            # The previous path reached t_prev from the other chain, so its
            # last step was the limiting edge itself; reroute it through
            # the far chain.
            if b.pop_last() != t_prev or b.last() != p.source:
                raise GraphError("internal", "limiting edge not at path end")
            b.glue(far)
            b.hop(ce, crossed, [t_prev, *near[1:], p.sink])
        else:
            # Both entries on the shared side: merge this polygon's
            # completion edge with the previous one; the merged edge
            # additionally crosses the shared limiting edge.
            (old_ce, old_crossed) = b.last_hop()
            if old_ce[0] != p.source:
                raise GraphError("internal", "junction hop does not leave the source")
            merged_ce = (far[-1], old_ce[1])
            merged_crossed = crossed + (p.lower_limit,) + old_crossed
            b.splice_before_last(list(far), (merged_ce, merged_crossed))
            b.glue([*near[1:], p.sink])
        prev_side = side
    path, ces, crossings = b.result()
    return path, ces, crossings


def reconstruct(
    d: Decomposition,
    table: DpTable,
    costs: Optional[Sequence[Optional[PolygonCosts]]] = None,
) -> HpCompletionResult:
    """Walk the DP backpointers and build the optimal completion."""
    n_el = len(d.elements)
    sides: list[Optional[Side]] = [None] * n_el
    cur: Optional[Side] = table.final_side if n_el else None
    for i in range(n_el - 1, -1, -1):
        sides[i] = cur
        cur = table.back_l[i] if cur == "L" else table.back_r[i]
    if costs is None:
        costs = all_costs(d)
    path, ces, crossings = construct_path(d, costs, sides)
    total = sum(len(c) for c in crossings)
    if d.elements and total != table.minimum:
        raise GraphError(
            "internal",
            f"reconstructed {total} crossings, dynamic program found "
            f"{table.minimum}",
        )
    return HpCompletionResult(
        path=path,
        completion_edges=ces,
        crossings=crossings,
        total_crossings=total,
    )


def solve(g: OTStDigraph, check: bool = True) -> HpCompletionResult:
    """Decompose, run the DP and reconstruct; optionally self-verify."""
    d = decompose(g)
    costs = all_costs(d)
    table = dp_solve(d, costs)
    result = reconstruct(d, table, costs)
    if check:
        violations = verify_solution(g, result)
        if violations:
            raise GraphError(
                "internal", "solver produced an invalid result: " + violations[0]
            )
    return result


# ---------------------------------------------------------------------------
# Verification


def interleaves(
    cyc: Sequence[int], n: int, ce: DirectedEdge, e: DirectedEdge
) -> bool:
    """Whether edge ``e`` must cross a curve joining ``ce``'s endpoints,
    i.e. their endpoints alternate around the outer boundary cycle."""
    a, b = ce
    x, y = e
    if x == a or x == b or y == a or y == b:
        return False
    qa = cyc[a]
    rb = (cyc[b] - qa) % n
    return ((cyc[x] - qa) % n < rb) != ((cyc[y] - qa) % n < rb)


def _crossing_sort_key(cyc: Sequence[int], n: int, ce: DirectedEdge):
    a, b = ce
    qa = cyc[a]
    rb = (cyc[b] - qa) % n

    def key(e: DirectedEdge) -> tuple[int, int]:
        rx = (cyc[e[0]] - qa) % n
        ry = (cyc[e[1]] - qa) % n
        if rx > ry:
            rx, ry = ry, rx
        # Separation order: forward-arc endpoint outward from the tail,
        # then backward-arc endpoint outward from the tail.
        return (rx, n - ry)

    return key


def verify_solution(g: OTStDigraph, r: HpCompletionResult) -> list[str]:
    """Check a completion result against the problem contract.

    Empty iff: the path is a hamiltonian s->t path whose non-edges are
    exactly the completion edges; every graph edge runs forward along the
    path (the crossing-extended digraph is then acyclic); every crossing
    list matches exactly the graph edges forced to cross its completion
    edge, in geometric order; and no graph edge is crossed twice.
    Violations are returned as messages, not raised.
    """
    base = g.base
    out: list[str] = []
    n = base.n
    path = r.path
    if len(path) != n or set(path) != set(range(n)):
        out.append("path is not a permutation of the vertices")
        return out
    if path[0] != base.s or path[-1] != base.t:
        out.append("path does not run from the source to the sink")
    rank = [0] * n
    for i, v in enumerate(path):
        rank[v] = i
    expected_completion = tuple(
        (a, b) for a, b in zip(path, path[1:]) if (a, b) not in base.edges
    )
    if tuple(r.completion_edges) != expected_completion:
        out.append(
            "completion edges are not exactly the consecutive path "
            "pairs missing from the graph"
        )
        return out
    if len(r.crossings) != len(r.completion_edges):
        out.append("crossing lists do not match completion edges")
        return out
    for (u, v) in base.edges:
        if rank[u] >= rank[v]:
            out.append(
                f"edge {base.name_edge((u, v))} runs backwards along the path"
            )
    if r.total_crossings != sum(len(c) for c in r.crossings):
        out.append("total_crossings does not equal the sum of list lengths")
    cyc = g.cycle_pos
    seen: dict[DirectedEdge, DirectedEdge] = {}
    for ce, lst in zip(r.completion_edges, r.crossings):
        forced = {
            e for e in base.edges if interleaves(cyc, n, ce, e)
        }
        if set(lst) != forced:
            missing = forced - set(lst)
            extra = set(lst) - forced
            out.append(
                f"completion edge {base.name_edge(ce)} crossing set mismatch"
                + (f"; missing {sorted(missing)}" if missing else "")
                + (f"; extra {sorted(extra)}" if extra else "")
            )
            continue
        if len(set(lst)) != len(lst):
            out.append(
                f"completion edge {base.name_edge(ce)} crosses an edge twice"
            )
        key = _crossing_sort_key(cyc, n, ce)
        if list(lst) != sorted(lst, key=key):
            out.append(
                f"completion edge {base.name_edge(ce)} crossings out of "
                f"geometric order"
            )
        for e in lst:
            x, y = e
            if not (rank[x] < rank[ce[0]] and rank[y] > rank[ce[1]]):
                out.append(
                    f"crossing of {base.name_edge(e)} with "
                    f"{base.name_edge(ce)} would create a cycle"
                )
            if e in seen:
                out.append(
                    f"edge {base.name_edge(e)} crossed by two completion edges"
                )
            seen[e] = ce
    return out


# ---------------------------------------------------------------------------
# Exhaustive oracle over entry-side vectors (used by oracle_gen and tests)


def min_crossings_by_enumeration(g: OTStDigraph, max_polygons: int = 20) -> int:
    """Minimum crossings over all 2^(polygon count) entry-side vectors.

    Each candidate path is built by the constructive rules and its
    crossings are counted independently of both the DP recurrences and
    the construction's own crossing lists, by testing which graph edges
    interleave each completion edge on the boundary cycle.
    """
    d = decompose(g)
    polys = [i for i, el in enumerate(d.elements) if isinstance(el, StPolygon)]
    if len(polys) > max_polygons:
        raise GraphError(
            "too-many-polygons",
            f"{len(polys)} polygons exceed the oracle limit {max_polygons}",
        )
    costs = all_costs(d)
    cyc = g.cycle_pos
    base_n = g.base.n
    edges = sorted(g.base.edges)
    best: Optional[int] = None
    sides: list[Optional[Side]] = [None] * len(d.elements)
    for bits in product("LR", repeat=len(polys)):
        for idx, side in zip(polys, bits):
            sides[idx] = side
        _, ces, _ = construct_path(d, costs, sides)
        total = 0
        for ce in ces:
            total += sum(1 for e in edges if interleaves(cyc, base_n, ce, e))
        if best is None or total < best:
            best = total
    if best is None:  # no polygons: the decomposition is all free vertices
        best = 0
    return best
