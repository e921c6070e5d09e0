"""Rhombus detection and hamiltonian paths in triangulated st-digraphs.

A triangulated st-digraph has a hamiltonian path exactly when no edge is
the median of a rhombus, i.e. no edge is flanked on both sides by interior
"transitive" triangles (third vertex w with u->w->v over the edge (u,v)).
Hamiltonian paths in DAGs coincide with unique topological orders, which
Kahn elimination decides in linear time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_model import (
    DirectedEdge,
    EmbeddedDigraph,
    FaceSet,
    GraphError,
    VertexId,
    faces,
)


@dataclass(frozen=True)
class Rhombus:
    source: VertexId
    sink: VertexId
    left_apex: VertexId
    right_apex: VertexId
    median: DirectedEdge


def _transitive_apex(
    g: EmbeddedDigraph, fs: FaceSet, edge: DirectedEdge, dart: tuple[int, int]
) -> Optional[VertexId]:
    """Third vertex w of the triangle right of ``dart`` if it carries the
    transitive orientation u->w->v over ``edge`` = (u, v); None otherwise
    (including when that face is the outer one)."""
    face_id = fs.dart_face[dart]
    if face_id == fs.outer:
        return None
    walk = fs.walks[face_id]
    if len(walk) != 3:
        return None
    u, v = edge
    (w,) = {x for (x, _) in walk} - {u, v}
    if (u, w) in g.edges and (w, v) in g.edges:
        return w
    return None


def find_rhombi(
    g: EmbeddedDigraph, face_set: Optional[FaceSet] = None
) -> tuple[Rhombus, ...]:
    """All rhombi of a triangulated st-digraph, one O(1) test per edge.

    Reported once per median edge, ordered by (tail id, head id).  Raises
    if some interior face is not a triangle.
    """
    fs = face_set if face_set is not None else faces(g)
    for i, walk in enumerate(fs.walks):
        if i != fs.outer and len(walk) != 3:
            names = "(" + ",".join(g.names[u] for (u, _) in walk) + ")"
            raise GraphError(
                "non-triangular-face",
                f"interior face {names} is not a triangle",
            )
    out = []
    for (u, v) in sorted(g.edges):
        right_apex = _transitive_apex(g, fs, (u, v), (u, v))
        if right_apex is None:
            continue
        left_apex = _transitive_apex(g, fs, (u, v), (v, u))
        if left_apex is None:
            continue
        out.append(
            Rhombus(
                source=u,
                sink=v,
                left_apex=left_apex,
                right_apex=right_apex,
                median=(u, v),
            )
        )
    return tuple(out)


def hamiltonian_path(g: EmbeddedDigraph) -> Optional[tuple[VertexId, ...]]:
    """The hamiltonian path of an acyclic digraph, or None.

    A DAG has a hamiltonian path iff its topological order is unique, i.e.
    Kahn elimination never sees two simultaneous zero-indegree vertices.
    The consecutive-edge check below is then redundant but guards the
    implementation.
    """
    n = g.n
    indeg = [0] * n
    for (_, v) in g.edges:
        indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order: list[VertexId] = []
    while ready:
        if len(ready) > 1:
            return None
        v = ready.pop()
        order.append(v)
        for w in g.out_neighbors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != n:
        return None
    for a, b in zip(order, order[1:]):
        if (a, b) not in g.edges:
            return None
    return tuple(order)
