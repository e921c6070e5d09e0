"""Solve the crossing-minimal completion problem step by step.

The pipeline: detect median edges, extract the maximal polygons, order
them with the free vertices into the decomposition, price each polygon's
two entry sides, run the dynamic program, and reconstruct the path with
its completion edges and per-edge crossing lists.
"""

from hpccm import (
    FreeVertex,
    StPolygon,
    all_costs,
    decompose,
    dp_solve,
    five_crossing_polygon,
    polygon_stack,
    reconstruct,
    rhombus,
    solve,
    verify_solution,
)


def show(title, ot):
    names = ot.base.names
    print(f"== {title} (n={ot.base.n})")
    d = decompose(ot)
    for el in d.elements:
        if isinstance(el, FreeVertex):
            print(f"  free {names[el.vertex]}")
        else:
            print(
                f"  polygon {names[el.source]}->{names[el.sink]} "
                f"median={ot.base.name_edge(el.median)} "
                f"left={[names[v] for v in el.left_chain]} "
                f"right={[names[v] for v in el.right_chain]}"
            )
    print(f"  shared between neighbours: {list(d.shared)}")
    costs = all_costs(d)
    for el, c in zip(d.elements, costs):
        if isinstance(el, StPolygon):
            print(
                f"  entry costs at {names[el.sink]}: "
                f"left={c.cost_left} right={c.cost_right}"
            )
    table = dp_solve(d, costs)
    result = reconstruct(d, table, costs)
    print(f"  minimum crossings: {result.total_crossings}")
    print(f"  path: {','.join(names[v] for v in result.path)}")
    for ce, lst in zip(result.completion_edges, result.crossings):
        crossed = ", ".join(ot.base.name_edge(e) for e in lst)
        print(f"  add {names[ce[0]]}->{names[ce[1]]} crossing [{crossed}]")
    assert verify_solution(ot, result) == []
    print()


show("rhombus", rhombus())
show("polygon with 5 forced crossings either way", five_crossing_polygon())
show("three stacked polygons sharing limiting edges", polygon_stack(3))

# One-liner for the impatient:
print("solve(rhombus()) ->", solve(rhombus()).total_crossings, "crossing")
