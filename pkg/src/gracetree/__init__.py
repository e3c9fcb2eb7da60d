"""Graceful labelling of rooted symmetric trees.

Build a tree shape from its daughter degree sequence, label every vertex
with the closed-form graceful labelling, decode labels back to vertices,
and verify gracefulness and weak-separator structure against independent
oracles.
"""

from .errors import (
    CapacityError,
    ConsistencyError,
    DegreeSequenceError,
    InvalidVertexError,
    LabelRangeError,
    LabellingStreamError,
    NotGracefulError,
    SearchCapError,
)
from .inverse import DecodeState, invert_label, trace_inversion
from .labelling import (
    GracefulLabelling,
    LabelledVertex,
    edge_label,
    label_all,
    label_vertex,
    records_from_assignment,
)
from .shape import (
    TreeShape,
    VertexId,
    build_shape,
    enumerate_vertices,
    format_vertex,
    parent,
    parse_degree_sequence,
    parse_vertex,
    validate_vertex,
)
from .verification import (
    Counterexample,
    VerificationReport,
    WeaklyAlphaReport,
    auxiliary_bitmap_bytes,
    brute_force_graceful,
    canonical_path_labelling,
    check_weakly_alpha,
    verify_graceful,
    verify_with_weak_alpha,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "Counterexample",
    "DecodeState",
    "DegreeSequenceError",
    "GracefulLabelling",
    "InvalidVertexError",
    "LabelRangeError",
    "LabelledVertex",
    "LabellingStreamError",
    "NotGracefulError",
    "SearchCapError",
    "TreeShape",
    "VerificationReport",
    "VertexId",
    "WeaklyAlphaReport",
    "auxiliary_bitmap_bytes",
    "brute_force_graceful",
    "build_shape",
    "canonical_path_labelling",
    "check_weakly_alpha",
    "edge_label",
    "enumerate_vertices",
    "format_vertex",
    "invert_label",
    "label_all",
    "label_vertex",
    "parent",
    "parse_degree_sequence",
    "parse_vertex",
    "records_from_assignment",
    "trace_inversion",
    "validate_vertex",
    "verify_graceful",
    "verify_with_weak_alpha",
]
