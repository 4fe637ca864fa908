"""Subset-inclusion graphs, exact layered drawings and geometric thickness tools."""
from .graphs import IncidenceGraph, SimpleGraph, SubsetVertex, generate_incidence_graph
from .geometry import Point, Segment, SegmentRelation, orientation, segment_relation
from .drawings import (BookLayout, LayeredDrawing, layer_crossings, validate_drawing,
                       verify_book_witness, verify_geometric_thickness_witness,
                       verify_thickness_layering)
from .classify import classify, clockwise_numbering
from .constructions import (g38_geometric_drawing, thickness3_layering, two_tripleton_inner_fixture,
                            upper_bound_drawing)
from .search import (book_thickness_exact, geometric_thickness_upper_search,
                     min_layers_fixed_placement, refute_outer_type)
from .bounds import (erdos_szekeres_upper, ramsey_upper, separation_pipeline_bound,
                     theorem_color_classes)

__version__ = "0.1.0"

__all__ = [
    "IncidenceGraph",
    "SimpleGraph",
    "SubsetVertex",
    "generate_incidence_graph",
    "Point",
    "Segment",
    "SegmentRelation",
    "orientation",
    "segment_relation",
    "BookLayout",
    "LayeredDrawing",
    "layer_crossings",
    "validate_drawing",
    "verify_book_witness",
    "verify_geometric_thickness_witness",
    "verify_thickness_layering",
    "classify",
    "clockwise_numbering",
    "g38_geometric_drawing",
    "thickness3_layering",
    "two_tripleton_inner_fixture",
    "upper_bound_drawing",
    "book_thickness_exact",
    "geometric_thickness_upper_search",
    "min_layers_fixed_placement",
    "refute_outer_type",
    "erdos_szekeres_upper",
    "ramsey_upper",
    "separation_pipeline_bound",
    "theorem_color_classes",
]
