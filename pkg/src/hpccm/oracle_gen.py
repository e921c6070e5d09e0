"""Seeded random instance generation and brute-force oracles.

Instances are built on a fixed boundary cycle (source, left chain, sink,
reversed right chain): a random triangulation of that cycle plus a random
interleaving of the two chains' heights determines the edge set and its
orientation, and the clockwise rotations fall out of the cycle positions.
Every generated graph is validated by the OT classifier before being
returned.

The oracles deliberately avoid the solver's recurrences: minimum
crossings are found by enumerating all entry-side vectors and counting
forced crossings from boundary interleavings, and hamiltonicity by
depth-first search over all simple source-to-sink paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph_model import (
    EmbeddedDigraph,
    GraphError,
    OTStDigraph,
    classify_ot,
)
from .solver import min_crossings_by_enumeration


@dataclass(frozen=True)
class GenProfile:
    """Shape of a random instance: chain lengths, chord bias, RNG seed."""

    n_left: int
    n_right: int
    polygon_bias: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_left < 0 or self.n_right < 0 or self.n_left + self.n_right < 1:
            raise ValueError("chain lengths must be non-negative and sum to >= 1")
        if not 0.0 <= self.polygon_bias <= 1.0:
            raise ValueError("polygon_bias must lie in [0, 1]")


def _random_triangulation(
    n: int, t_pos: int, bias: float, rng: random.Random
) -> list[tuple[int, int]]:
    """Chords (as cycle-position pairs) of a random triangulation of an
    n-gon.  With probability ``bias`` a split apexes at the sink position,
    which favours source/sink fans and therefore large, chord-heavy
    polygons around the median."""
    chords: list[tuple[int, int]] = []
    stack = [(0, n - 1)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:
            continue
        if a < t_pos < b and rng.random() < bias:
            c = t_pos
        else:
            c = rng.randrange(a + 1, b)
        if c - a >= 2:
            chords.append((a, c))
        if b - c >= 2:
            chords.append((c, b))
        stack.append((a, c))
        stack.append((c, b))
    return chords


def random_ot(profile: GenProfile) -> OTStDigraph:
    """Random outerplanar triangulated st-digraph; deterministic per profile."""
    rng = random.Random(profile.seed)
    k, m = profile.n_left, profile.n_right
    n = k + m + 2
    names = ["s"] + [f"l{i}" for i in range(1, k + 1)] + [
        f"r{j}" for j in range(1, m + 1)
    ] + ["t"]
    s = 0
    t = n - 1
    left = list(range(1, k + 1))
    right = list(range(k + 1, k + 1 + m))

    # Boundary cycle: s, left chain up, t, right chain down.
    cycle = [s, *left, t, *reversed(right)]
    cyc_pos = [0] * n
    for p, v in enumerate(cycle):
        cyc_pos[v] = p

    # Heights: s first, t last, chains interleaved at random.
    seq = ["L"] * k + ["R"] * m
    rng.shuffle(seq)
    height = [0] * n
    il = iter(left)
    ir = iter(right)
    for rank, tag in enumerate(seq, start=1):
        height[next(il) if tag == "L" else next(ir)] = rank
    height[t] = n - 1

    edges: set[tuple[int, int]] = set()
    left_path = [s, *left, t]
    right_path = [s, *right, t]
    edges.update(zip(left_path, left_path[1:]))
    edges.update(zip(right_path, right_path[1:]))
    for (pa, pb) in _random_triangulation(n, k + 1, profile.polygon_bias, rng):
        x, y = cycle[pa], cycle[pb]
        edges.add((x, y) if height[x] < height[y] else (y, x))

    adjacency: list[list[int]] = [[] for _ in range(n)]
    for (u, v) in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    rotation = tuple(
        tuple(sorted(adjacency[v], key=lambda w: (cyc_pos[w] - cyc_pos[v]) % n))
        for v in range(n)
    )
    g = EmbeddedDigraph(
        names=tuple(names),
        s=s,
        t=t,
        edges=frozenset(edges),
        rotation=rotation,
    )
    return classify_ot(g)


def exhaustive_min_crossings(g: OTStDigraph, max_polygons: int = 20) -> int:
    """Brute-force minimum crossings over all 2^(polygon count) entry-side
    vectors, counted from boundary interleavings (no DP recurrences)."""
    return min_crossings_by_enumeration(g, max_polygons=max_polygons)


def exhaustive_hamiltonian(g: EmbeddedDigraph, limit: int = 12) -> bool:
    """DFS over all simple s->t paths; True iff one covers every vertex."""
    if g.n > limit:
        raise GraphError(
            "too-large", f"exhaustive search limited to {limit} vertices"
        )
    n = g.n
    target = g.t
    out_nbrs = g.out_neighbors
    visited = [False] * n
    visited[g.s] = True

    def walk(v: int, count: int) -> bool:
        if v == target:
            return count == n
        for w in out_nbrs[v]:
            if not visited[w]:
                visited[w] = True
                if walk(w, count + 1):
                    return True
                visited[w] = False
        return False

    return walk(g.s, 1)


# ---------------------------------------------------------------------------
# Deterministic instance builders


def _from_cycle(
    names: list[str],
    cycle: list[int],
    heights: list[int],
    chords: list[tuple[int, int]],
    validate: bool = True,
) -> OTStDigraph:
    """Assemble an OT instance from its boundary cycle and chord list.

    ``cycle`` lists vertex ids as s, left chain, t, reversed right chain;
    chords are id pairs, oriented by ``heights``.
    """
    n = len(names)
    s, t = cycle[0], None
    cyc_pos = [0] * n
    for p, v in enumerate(cycle):
        cyc_pos[v] = p
    t_at = max(range(n), key=lambda p: heights[cycle[p]])
    t = cycle[t_at]
    left = cycle[1:t_at]
    right = list(reversed(cycle[t_at + 1 :]))
    edges: set[tuple[int, int]] = set()
    left_path = [s, *left, t]
    right_path = [s, *right, t]
    edges.update(zip(left_path, left_path[1:]))
    edges.update(zip(right_path, right_path[1:]))
    for (x, y) in chords:
        edges.add((x, y) if heights[x] < heights[y] else (y, x))
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for (u, v) in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    rotation = tuple(
        tuple(sorted(adjacency[v], key=lambda w: (cyc_pos[w] - cyc_pos[v]) % n))
        for v in range(n)
    )
    g = EmbeddedDigraph(
        names=tuple(names),
        s=s,
        t=t,
        edges=frozenset(edges),
        rotation=rotation,
    )
    if validate:
        return classify_ot(g)
    return OTStDigraph(base=g, left=tuple(left), right=tuple(right))


def triangle() -> OTStDigraph:
    """Smallest triangulated st-digraph: s -> v -> t plus s -> t."""
    return _from_cycle(
        names=["s", "v", "t"],
        cycle=[0, 1, 2],
        heights=[0, 1, 2],
        chords=[],
    )


def rhombus() -> OTStDigraph:
    """Four vertices, two interior faces, median (s, t); not hamiltonian."""
    return _from_cycle(
        names=["s", "a", "t", "b"],
        cycle=[0, 1, 2, 3],
        heights=[0, 1, 3, 2],
        chords=[(0, 2)],
    )


def five_crossing_polygon() -> OTStDigraph:
    """Single maximal st-polygon on chains of 8 and 4 vertices whose two
    single-edge completions cost 5 crossings each.

    Left region: fan from s up to u4, then fan into t; right region: fan
    from v1.  Chords into t from u4..u7 and out of s to u2..u4 put both
    entry sides at 1 + 4 + 0 = 1 + 1 + 3 = 5.
    """
    names = ["s"] + [f"u{i}" for i in range(1, 9)] + [
        f"v{j}" for j in range(1, 5)
    ] + ["t"]
    # ids: s=0, u1..u8 = 1..8, v1..v4 = 9..12, t=13
    u = {i: i for i in range(1, 9)}
    v = {j: 8 + j for j in range(1, 5)}
    s, t = 0, 13
    cycle = [s, *(u[i] for i in range(1, 9)), t, *(v[j] for j in (4, 3, 2, 1))]
    heights = list(range(9)) + [9, 10, 11, 12] + [13]
    chords = [
        (s, u[2]),
        (s, u[3]),
        (s, u[4]),
        (u[4], t),
        (u[5], t),
        (u[6], t),
        (u[7], t),
        (s, t),
        (v[1], v[3]),
        (v[1], v[4]),
        (v[1], t),
    ]
    return _from_cycle(names=names, cycle=cycle, heights=heights, chords=chords)


def polygon_stack(count: int, validate: bool = True) -> OTStDigraph:
    """Chain of ``count`` stacked st-polygons, consecutive ones sharing a
    limiting edge; n = 2*count + 2 vertices."""
    if count < 1:
        raise ValueError("count must be >= 1")
    k = count
    names = ["s"] + [f"l{i}" for i in range(1, k + 1)] + [
        f"r{j}" for j in range(1, k + 1)
    ] + ["t"]
    s = 0
    t = 2 * k + 1
    l = {i: i for i in range(1, k + 1)}
    r = {j: k + j for j in range(1, k + 1)}
    cycle = [s, *(l[i] for i in range(1, k + 1)), t, *(r[j] for j in range(k, 0, -1))]
    heights = [0] * (2 * k + 2)
    for i in range(1, k + 1):
        heights[l[i]] = 2 * i - 1
        heights[r[i]] = 2 * i
    heights[t] = 2 * k + 1
    if k == 1:
        chords = [(s, t)]
    else:
        chords = [(s, l[2])]
        chords += [(r[i], l[i + 1]) for i in range(1, k)]
        chords += [(r[i], l[i + 2]) for i in range(1, k - 1)]
        chords += [(r[k - 1], t)]
    return _from_cycle(
        names=names, cycle=cycle, heights=heights, chords=chords, validate=validate
    )
