"""Crossing-minimal acyclic hamiltonian path completion for outerplanar
triangulated st-digraphs, with upward 2-page topological book embeddings.
"""

from .book_embedding import (
    BookEmbedding,
    PageArc,
    SpineCrossing,
    SplitArc,
    from_book_embedding,
    render_svg,
    render_text,
    to_book_embedding,
    validate_embedding,
)
from .decomposition import (
    Decomposition,
    FreeVertex,
    StPolygon,
    decompose,
    is_median,
    maximal_polygon,
)
from .graph_model import (
    DirectedEdge,
    EmbeddedDigraph,
    GraphError,
    OTStDigraph,
    Sidedness,
    VertexId,
    build_graph,
    classify_ot,
    edge_sidedness,
    faces,
    parse_graph,
    serialize_graph,
    validate_embedded,
)
from .hamiltonicity import Rhombus, find_rhombi, hamiltonian_path
from .oracle_gen import (
    GenProfile,
    exhaustive_hamiltonian,
    exhaustive_min_crossings,
    five_crossing_polygon,
    polygon_stack,
    random_ot,
    rhombus,
    triangle,
)
from .solver import (
    DpTable,
    HpCompletionResult,
    PolygonCosts,
    all_costs,
    construct_path,
    crossed_edges,
    dp_solve,
    polygon_costs,
    reconstruct,
    solve,
    verify_solution,
)

__all__ = [
    "BookEmbedding",
    "Decomposition",
    "DirectedEdge",
    "DpTable",
    "EmbeddedDigraph",
    "FreeVertex",
    "GenProfile",
    "GraphError",
    "HpCompletionResult",
    "OTStDigraph",
    "PageArc",
    "PolygonCosts",
    "Rhombus",
    "Sidedness",
    "SpineCrossing",
    "SplitArc",
    "StPolygon",
    "VertexId",
    "all_costs",
    "build_graph",
    "classify_ot",
    "construct_path",
    "crossed_edges",
    "decompose",
    "dp_solve",
    "edge_sidedness",
    "exhaustive_hamiltonian",
    "exhaustive_min_crossings",
    "faces",
    "find_rhombi",
    "five_crossing_polygon",
    "from_book_embedding",
    "hamiltonian_path",
    "is_median",
    "maximal_polygon",
    "parse_graph",
    "polygon_costs",
    "polygon_stack",
    "random_ot",
    "reconstruct",
    "render_svg",
    "render_text",
    "rhombus",
    "serialize_graph",
    "solve",
    "to_book_embedding",
    "triangle",
    "validate_embedded",
    "validate_embedding",
    "verify_solution",
]
