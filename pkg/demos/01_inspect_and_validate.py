"""Walk through the graph model: parsing, faces, chains, rhombi.

A graph file carries names, the source/sink, the edge list and a
clockwise rotation per vertex; everything else -- faces, the outer
boundary, the left/right chains, edge sidedness -- is derived.
"""

from hpccm import (
    Sidedness,
    classify_ot,
    edge_sidedness,
    faces,
    find_rhombi,
    hamiltonian_path,
    parse_graph,
    rhombus,
    serialize_graph,
    triangle,
)

# The smallest triangulated st-digraph: s -> v -> t with the shortcut s -> t.
tri = triangle()
print("triangle file:")
print(serialize_graph(tri.base))

g = parse_graph(serialize_graph(tri.base))
fs = faces(g)
print(f"faces: {len(fs.walks)} (1 interior + the outer face)")
print(f"hamiltonian path: {[g.names[v] for v in hamiltonian_path(g)]}")

# The rhombus: two transitive triangles glued along the median (s, t).
# It is the smallest st-digraph without a hamiltonian path.
rh = rhombus()
ot = classify_ot(rh.base)
print("\nrhombus chains:",
      "left =", [rh.base.names[v] for v in ot.left],
      "| right =", [rh.base.names[v] for v in ot.right])
for r in find_rhombi(rh.base):
    print("rhombus found: median", rh.base.name_edge(r.median),
          "apexes", rh.base.names[r.left_apex], rh.base.names[r.right_apex])
print("hamiltonian path:", hamiltonian_path(rh.base))

# Sidedness drives the median tests: edges touching s or t count as
# one-sided on the side of their other endpoint.
for e in sorted(rh.base.edges):
    tag = edge_sidedness(ot, e)
    print(f"  {rh.base.name_edge(e):6s} {tag.value}")
assert edge_sidedness(ot, (rh.base.s, rh.base.t)) is Sidedness.ONE_SIDED_LEFT
