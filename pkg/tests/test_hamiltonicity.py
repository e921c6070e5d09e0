import pytest

from hpccm import (
    GenProfile,
    GraphError,
    exhaustive_hamiltonian,
    faces,
    find_rhombi,
    hamiltonian_path,
    random_ot,
)
from hpccm.graph_model import build_graph


def test_rhombus_has_one_rhombus(rh):
    rhombi = find_rhombi(rh.base)
    assert len(rhombi) == 1
    r = rhombi[0]
    assert r.median == (rh.base.s, rh.base.t)
    assert {rh.base.names[r.left_apex], rh.base.names[r.right_apex]} == {"a", "b"}


def test_triangle_has_no_rhombus(tri):
    assert find_rhombi(tri.base) == ()


def test_generated_polygon_contains_one_rhombus(f9):
    assert len(find_rhombi(f9.base)) == 1


def test_rhombus_edges_exist(corpus):
    for ot in corpus[:40]:
        for r in find_rhombi(ot.base):
            edges = ot.base.edges
            u, v = r.median
            for e in [
                (u, r.left_apex),
                (r.left_apex, v),
                (u, r.right_apex),
                (r.right_apex, v),
                (u, v),
            ]:
                assert e in edges


def test_rhombi_reported_in_median_order(corpus):
    for ot in corpus[:40]:
        medians = [r.median for r in find_rhombi(ot.base)]
        assert medians == sorted(medians)


def test_non_triangulated_rejected():
    # Square face: s -> a -> t, s -> b -> t without any chord.
    g = build_graph(
        names=["s", "a", "b", "t"],
        source="s",
        sink="t",
        edges=[("s", "a"), ("a", "t"), ("s", "b"), ("b", "t")],
        rotation={
            "s": ["a", "b"],
            "a": ["t", "s"],
            "b": ["s", "t"],
            "t": ["b", "a"],
        },
    )
    with pytest.raises(GraphError) as exc:
        find_rhombi(g)
    assert exc.value.kind == "non-triangular-face"


def test_hamiltonian_triangle(tri):
    names = tri.base.names
    path = hamiltonian_path(tri.base)
    assert path is not None
    assert [names[v] for v in path] == ["s", "v", "t"]


def test_hamiltonian_rhombus_none(rh):
    assert hamiltonian_path(rh.base) is None


def test_exhaustive_hamiltonian_examples(tri, rh):
    assert exhaustive_hamiltonian(tri.base) is True
    assert exhaustive_hamiltonian(rh.base) is False
    with pytest.raises(GraphError):
        exhaustive_hamiltonian(random_ot(GenProfile(7, 7, 0.5, 1)).base)


def test_hamiltonicity_characterization_small(corpus):
    # Hamiltonian path exists iff no rhombus, cross-checked with DFS.
    checked = 0
    for ot in corpus:
        g = ot.base
        if g.n > 12:
            continue
        path = hamiltonian_path(g)
        rhombi = find_rhombi(g)
        brute = exhaustive_hamiltonian(g)
        assert (path is not None) == (len(rhombi) == 0) == brute
        if path is not None:
            assert len(set(path)) == g.n
            assert all((a, b) in g.edges for a, b in zip(path, path[1:]))
        checked += 1
    assert checked >= 50


class _CountingDict(dict):
    def __init__(self, *args):
        super().__init__(*args)
        self.lookups = 0

    def __getitem__(self, key):
        self.lookups += 1
        return super().__getitem__(key)


class _InstrumentedFaces:
    def __init__(self, fs):
        self.walks = fs.walks
        self.outer = fs.outer
        self.dart_face = _CountingDict(fs.dart_face)


def test_find_rhombi_constant_lookups_per_edge(f9):
    # One O(1) test per edge: at most two face lookups per edge side.
    fs = _InstrumentedFaces(faces(f9.base))
    find_rhombi(f9.base, face_set=fs)
    assert fs.dart_face.lookups <= 2 * f9.base.m
