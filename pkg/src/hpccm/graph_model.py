"""Embedded planar acyclic digraphs described by rotation systems.

A graph is given purely combinatorially: for every vertex, the clockwise
cyclic order of its neighbours as seen in an upward drawing (source at the
bottom, sink at the top, left boundary chain on the left).  All derived
data -- faces, the outer face, boundary chains, edge sidedness -- follows
from that chirality convention.

Since the rotation system alone determines an embedding only up to the
choice of outer face, the file format fixes it: the rotation array of the
source starts at its leftmost edge, so the outer face is the face lying to
the right of the dart from the source to the *last* entry of its rotation
array.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional

VertexId = int
DirectedEdge = tuple[VertexId, VertexId]
Dart = tuple[VertexId, VertexId]


class GraphError(ValueError):
    """Invalid graph input; ``kind`` is a stable machine-readable tag."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class Sidedness(Enum):
    ONE_SIDED_LEFT = "one-sided-left"
    ONE_SIDED_RIGHT = "one-sided-right"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class EmbeddedDigraph:
    """Planar st-digraph with an explicit clockwise rotation system.

    Immutable after construction; every derived structure is cached and
    safe for concurrent reads.  Vertices are dense integer ids; ``names``
    maps them back to the labels used in graph files.
    """

    names: tuple[str, ...]
    s: VertexId
    t: VertexId
    edges: frozenset[DirectedEdge]
    rotation: tuple[tuple[VertexId, ...], ...]

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def id_of(self) -> dict[str, VertexId]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def out_neighbors(self) -> tuple[tuple[VertexId, ...], ...]:
        """Out-neighbours of each vertex, in clockwise rotation order."""
        return tuple(
            tuple(w for w in rot if (v, w) in self.edges)
            for v, rot in enumerate(self.rotation)
        )

    @cached_property
    def in_neighbors(self) -> tuple[tuple[VertexId, ...], ...]:
        return tuple(
            tuple(w for w in rot if (w, v) in self.edges)
            for v, rot in enumerate(self.rotation)
        )

    @cached_property
    def _rot_pos(self) -> tuple[dict[VertexId, int], ...]:
        return tuple({w: i for i, w in enumerate(rot)} for rot in self.rotation)

    def cw_pred(self, v: VertexId, u: VertexId) -> VertexId:
        """Neighbour immediately before ``u`` in the clockwise order at ``v``."""
        rot = self.rotation[v]
        return rot[self._rot_pos[v][u] - 1]

    def cw_succ(self, v: VertexId, u: VertexId) -> VertexId:
        rot = self.rotation[v]
        pos = self._rot_pos[v][u] + 1
        return rot[pos if pos < len(rot) else 0]

    def next_dart(self, dart: Dart) -> Dart:
        """Following dart on the boundary of the face right of ``dart``."""
        u, v = dart
        return (v, self.cw_pred(v, u))

    def name_edge(self, e: DirectedEdge) -> str:
        return f"{self.names[e[0]]}->{self.names[e[1]]}"


@dataclass(frozen=True)
class FaceSet:
    """All faces of an embedding, as cyclic dart walks."""

    walks: tuple[tuple[Dart, ...], ...]
    outer: int

    @cached_property
    def dart_face(self) -> dict[Dart, int]:
        return {d: i for i, walk in enumerate(self.walks) for d in walk}

    @property
    def interior(self) -> tuple[tuple[Dart, ...], ...]:
        return tuple(w for i, w in enumerate(self.walks) if i != self.outer)


@dataclass(frozen=True)
class OTStDigraph:
    """Validated outerplanar triangulated st-digraph.

    ``left`` and ``right`` are the boundary chains bottom-to-top, excluding
    the source and sink (which by convention belong to both sides).
    """

    base: EmbeddedDigraph
    left: tuple[VertexId, ...]
    right: tuple[VertexId, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def side(self) -> tuple[str, ...]:
        """'L', 'R', 'S' or 'T' per vertex."""
        tags = [""] * self.base.n
        tags[self.base.s] = "S"
        tags[self.base.t] = "T"
        for v in self.left:
            tags[v] = "L"
        for v in self.right:
            tags[v] = "R"
        return tuple(tags)

    @cached_property
    def chain_pos(self) -> tuple[int, ...]:
        """1-based position within the vertex's own chain (0 for s and t)."""
        pos = [0] * self.base.n
        for i, v in enumerate(self.left, start=1):
            pos[v] = i
        for j, v in enumerate(self.right, start=1):
            pos[v] = j
        return tuple(pos)

    @cached_property
    def cycle_pos(self) -> tuple[int, ...]:
        """Position on the outer boundary cycle: s, left chain, t, reversed
        right chain."""
        order = [self.base.s, *self.left, self.base.t, *reversed(self.right)]
        pos = [0] * self.base.n
        for i, v in enumerate(order):
            pos[v] = i
        return tuple(pos)


# ---------------------------------------------------------------------------
# Face tracing and validation


def trace_face(g: EmbeddedDigraph, start: Dart) -> tuple[Dart, ...]:
    """Boundary walk of the face lying to the right of ``start``."""
    walk = [start]
    d = g.next_dart(start)
    while d != start:
        walk.append(d)
        d = g.next_dart(d)
    return tuple(walk)


def outer_face_start(g: EmbeddedDigraph) -> Dart:
    """Dart whose right face is the outer face, by the format convention."""
    return (g.s, g.rotation[g.s][-1])


def faces(g: EmbeddedDigraph) -> FaceSet:
    """All face boundary walks traced from the rotation system.

    Each dart (directed edge side) belongs to exactly one walk; the outer
    face is the one containing the dart fixed by the source's rotation
    array convention.
    """
    seen: set[Dart] = set()
    walks: list[tuple[Dart, ...]] = []
    outer_start = outer_face_start(g)
    outer = -1
    darts = [(u, v) for (u, v) in sorted(g.edges)] + [
        (v, u) for (u, v) in sorted(g.edges)
    ]
    for d0 in darts:
        if d0 in seen:
            continue
        walk = trace_face(g, d0)
        seen.update(walk)
        if outer_start in walk:
            outer = len(walks)
        walks.append(walk)
    return FaceSet(walks=tuple(walks), outer=outer)


def _check_consecutive_blocks(g: EmbeddedDigraph, v: VertexId) -> None:
    rot = g.rotation[v]
    flags = [(v, w) in g.edges for w in rot]
    if all(flags) or not any(flags):
        return
    # A single maximal run of outgoing edges means a single run of incoming
    # ones too; count block changes around the cycle.
    changes = sum(1 for i in range(len(rot)) if flags[i] != flags[i - 1])
    if changes != 2:
        raise GraphError(
            "non-consecutive-in-out",
            f"vertex {g.names[v]}: incoming/outgoing edges are interleaved "
            f"in the rotation",
        )


def validate_embedded(g: EmbeddedDigraph) -> None:
    """Check every invariant of an embedded planar st-digraph.

    Raises GraphError with kinds: cyclic, multi-source, multi-sink,
    non-planar-rotation, non-consecutive-in-out, sink-not-on-outer-face.
    """
    n = g.n
    if n < 2:
        raise GraphError("too-small", "graph needs at least vertices s and t")
    indeg = [0] * n
    outdeg = [0] * n
    for (u, v) in g.edges:
        outdeg[u] += 1
        indeg[v] += 1
    sources = [v for v in range(n) if indeg[v] == 0]
    sinks = [v for v in range(n) if outdeg[v] == 0]
    if len(sources) != 1 or sources[0] != g.s:
        raise GraphError(
            "multi-source",
            f"expected {g.names[g.s]} as the unique source, found "
            f"{[g.names[v] for v in sources]}",
        )
    if len(sinks) != 1 or sinks[0] != g.t:
        raise GraphError(
            "multi-sink",
            f"expected {g.names[g.t]} as the unique sink, found "
            f"{[g.names[v] for v in sinks]}",
        )
    # Kahn elimination detects cycles.
    deg = list(indeg)
    stack = [g.s]
    visited = 0
    while stack:
        v = stack.pop()
        visited += 1
        for w in g.out_neighbors[v]:
            deg[w] -= 1
            if deg[w] == 0:
                stack.append(w)
    if visited != n:
        raise GraphError("cyclic", "graph contains a directed cycle")
    for v in range(n):
        _check_consecutive_blocks(g, v)
    f = faces(g)
    if n - g.m + len(f.walks) != 2:
        raise GraphError(
            "non-planar-rotation",
            f"rotation system is not a planar embedding: V-E+F = "
            f"{n}-{g.m}+{len(f.walks)} != 2",
        )
    outer_vertices = {u for (u, _) in f.walks[f.outer]}
    if g.t not in outer_vertices:
        raise GraphError(
            "sink-not-on-outer-face",
            f"sink {g.names[g.t]} does not lie on the outer face",
        )


# ---------------------------------------------------------------------------
# Parsing and serialization

_FORMAT_KEYS = ("vertices", "source", "sink", "edges", "rotation")


def parse_graph(text: str) -> EmbeddedDigraph:
    """Parse the JSON graph format and check all invariants.

    Format: object with keys vertices (list of names), source, sink,
    edges (list of [tail, head] name pairs) and rotation (name -> clockwise
    neighbour list).  The source's rotation array must start at its
    leftmost edge; this pins down the outer face.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(
            "syntax", f"line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise GraphError("schema", "top-level value must be an object")
    for key in _FORMAT_KEYS:
        if key not in data:
            raise GraphError("schema", f"missing key {key!r}")
    names = data["vertices"]
    if (
        not isinstance(names, list)
        or not names
        or not all(isinstance(x, str) for x in names)
    ):
        raise GraphError("schema", "vertices must be a non-empty list of names")
    if len(set(names)) != len(names):
        raise GraphError("schema", "duplicate vertex names")
    ids = {name: i for i, name in enumerate(names)}

    def vid(name: object, where: str) -> int:
        if not isinstance(name, str) or name not in ids:
            raise GraphError("schema", f"unknown vertex {name!r} in {where}")
        return ids[name]

    s = vid(data["source"], "source")
    t = vid(data["sink"], "sink")
    edges: set[DirectedEdge] = set()
    for item in data["edges"]:
        if not isinstance(item, list) or len(item) != 2:
            raise GraphError("schema", f"edge entry {item!r} is not a pair")
        e = (vid(item[0], "edges"), vid(item[1], "edges"))
        if e[0] == e[1]:
            raise GraphError("schema", f"self-loop at {item[0]!r}")
        if e in edges:
            raise GraphError("schema", f"duplicate edge {item[0]}->{item[1]}")
        edges.add(e)
    rot_obj = data["rotation"]
    if not isinstance(rot_obj, dict):
        raise GraphError("schema", "rotation must be an object")
    adjacency: list[set[int]] = [set() for _ in names]
    for (u, v) in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    rotation: list[tuple[int, ...]] = []
    for i, name in enumerate(names):
        if name not in rot_obj:
            raise GraphError("schema", f"rotation missing for vertex {name!r}")
        row = [vid(w, f"rotation of {name!r}") for w in rot_obj[name]]
        if len(row) != len(set(row)):
            raise GraphError("schema", f"repeated neighbour in rotation of {name!r}")
        if set(row) != adjacency[i]:
            raise GraphError(
                "schema",
                f"rotation of {name!r} does not list exactly its neighbours",
            )
        rotation.append(tuple(row))
    g = EmbeddedDigraph(
        names=tuple(names),
        s=s,
        t=t,
        edges=frozenset(edges),
        rotation=tuple(rotation),
    )
    validate_embedded(g)
    return g


def serialize_graph(g: EmbeddedDigraph) -> str:
    """Canonical JSON text; parse_graph round-trips it bit-exactly."""
    data = {
        "vertices": list(g.names),
        "source": g.names[g.s],
        "sink": g.names[g.t],
        "edges": [[g.names[u], g.names[v]] for (u, v) in sorted(g.edges)],
        "rotation": {
            g.names[v]: [g.names[w] for w in rot]
            for v, rot in enumerate(g.rotation)
        },
    }
    return json.dumps(data, indent=2) + "\n"


# ---------------------------------------------------------------------------
# OT classification


def classify_ot(g: EmbeddedDigraph) -> OTStDigraph:
    """Derive boundary chains and verify the outerplanar triangulated shape.

    The outer face is walked once: its forward darts form the directed
    right boundary s..t, the reversed remainder the left boundary.  Fails
    if some vertex is not on the outer face or an interior face is not a
    triangle.
    """
    f = faces(g)
    outer = f.walks[f.outer]
    # Rotate the cyclic walk to start at s.
    starts = [i for i, (u, _) in enumerate(outer) if u == g.s]
    if len(starts) != 1:
        raise GraphError(
            "not-outerplanar",
            f"outer boundary visits {g.names[g.s]} {len(starts)} times",
        )
    k = starts[0]
    walk = outer[k:] + outer[:k]
    right: list[VertexId] = []
    left_rev: list[VertexId] = []
    at_t = False
    for (u, v) in walk[1:]:
        if u == g.t:
            at_t = True
        if at_t:
            if (v, u) not in g.edges:
                raise GraphError(
                    "not-outerplanar",
                    f"outer boundary dart {g.names[u]}->{g.names[v]} is not a "
                    f"reversed edge above the sink",
                )
            left_rev.append(v)
        else:
            if (u, v) not in g.edges:
                raise GraphError(
                    "not-outerplanar",
                    f"outer boundary reverses direction at {g.names[u]} "
                    f"before reaching the sink",
                )
            right.append(u)
    left_rev = left_rev[:-1]  # drop s, appended when the walk closes
    left = tuple(reversed(left_rev))
    right_chain = tuple(right)
    boundary = {g.s, g.t, *left, *right_chain}
    if len(boundary) != g.n or len(left) + len(right_chain) + 2 != len(walk):
        inner = sorted(set(range(g.n)) - boundary)
        name = g.names[inner[0]] if inner else "?"
        raise GraphError(
            "not-outerplanar", f"vertex {name} does not lie on the outer face"
        )
    if set(left) & set(right_chain):
        raise GraphError("not-outerplanar", "boundary chains overlap")
    for wk in f.interior:
        if len(wk) != 3:
            face_names = "(" + ",".join(g.names[u] for (u, _) in wk) + ")"
            raise GraphError(
                "non-triangular-face", f"interior face {face_names} is not a triangle"
            )
    return OTStDigraph(base=g, left=left, right=right_chain)


def edge_sidedness(g: OTStDigraph, e: DirectedEdge) -> Sidedness:
    """Classify an edge as one-sided (left/right) or two-sided.

    Edges incident to s or t count as one-sided, taking the side of the
    other endpoint; the edge (s, t) itself counts as one-sided left.
    """
    if e not in g.base.edges:
        raise GraphError("unknown-edge", f"edge {e} is not in the graph")
    u, v = e
    su, sv = g.side[u], g.side[v]
    if su in "ST" and sv in "ST":
        return Sidedness.ONE_SIDED_LEFT
    if su in "ST":
        return Sidedness.ONE_SIDED_LEFT if sv == "L" else Sidedness.ONE_SIDED_RIGHT
    if sv in "ST":
        return Sidedness.ONE_SIDED_LEFT if su == "L" else Sidedness.ONE_SIDED_RIGHT
    if su == sv:
        return Sidedness.ONE_SIDED_LEFT if su == "L" else Sidedness.ONE_SIDED_RIGHT
    return Sidedness.TWO_SIDED


def build_graph(
    names: Iterable[str],
    source: str,
    sink: str,
    edges: Iterable[tuple[str, str]],
    rotation: dict[str, Iterable[str]],
    validate: bool = True,
) -> EmbeddedDigraph:
    """Construct a graph from names (convenience for tests and builders)."""
    names = tuple(names)
    ids = {name: i for i, name in enumerate(names)}
    g = EmbeddedDigraph(
        names=names,
        s=ids[source],
        t=ids[sink],
        edges=frozenset((ids[u], ids[v]) for (u, v) in edges),
        rotation=tuple(tuple(ids[w] for w in rotation[name]) for name in names),
    )
    if validate:
        validate_embedded(g)
    return g
