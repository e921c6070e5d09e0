"""Turn completions into upward 2-page topological book embeddings.

The solved path becomes the spine order; edges go to the page matching
their side of the path, and every crossing of a completion edge becomes
one spine crossing.  The translation is exactly invertible.
"""

import pathlib

from hpccm import (
    five_crossing_polygon,
    from_book_embedding,
    render_svg,
    render_text,
    rhombus,
    solve,
    to_book_embedding,
    validate_embedding,
)

out_dir = pathlib.Path(__file__).resolve().parent / "out"
out_dir.mkdir(exist_ok=True)

for name, ot in (("rhombus", rhombus()), ("five_crossings", five_crossing_polygon())):
    result = solve(ot)
    b = to_book_embedding(ot, result)
    print(f"== {name}: {len(b.crossings)} spine crossing(s)")
    print(render_text(b))
    assert validate_embedding(ot.base, b) == []

    # The inverse reads the completion off consecutive spine pairs.
    back = from_book_embedding(ot.base, b)
    assert back.path == result.path
    assert back.total_crossings == result.total_crossings

    svg_path = out_dir / f"{name}.svg"
    svg_path.write_text(render_svg(b), encoding="utf-8")
    print(f"wrote {svg_path}\n")
