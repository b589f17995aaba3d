"""hyperq: spectral and extremal toolkit for uniform hypergraphs.

Builds r-uniform hypergraphs, computes tensor spectral radii of their
adjacency and signless Laplacian tensors by bracketed power iteration,
tests subhypergraph containment and 2-colorability, and runs a numeric
verification harness around extremal counts for Fano-free 3-graphs.
"""

from .containment import Embedding, contains_subgraph, is_fano_free, two_coloring
from .errors import (
    ArgumentRangeError,
    DimensionMismatchError,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeArityError,
    EmptyVertexSetError,
    FormatError,
    HyperqError,
    IterationLimitError,
    NegativeEntryError,
    NoConvergenceError,
    NotNormalizedError,
    TooSmallError,
    UniformityMismatchError,
    VertexOutOfRangeError,
)
from .hypergraph import (
    Hypergraph,
    TwoColoring,
    build_bn,
    build_complete,
    build_expansion,
    build_fano,
    build_two_part_complete,
    delete_vertex,
    parse,
    random_connected,
    serialize,
)
from .spectral import (
    ADJACENCY,
    SIGNLESS_LAPLACIAN,
    SpectralResult,
    apply_adjacency,
    apply_signless_laplacian,
    eigen_residual,
    rayleigh_maximize_bruteforce,
    rayleigh_q,
    spectral_radius,
)
from .turan import (
    CompetitorRecord,
    CriterionParams,
    CriterionRecord,
    DeletionCheck,
    ExtremalityReport,
    SplitProfile,
    bn_q_bounds,
    bn_scan_q,
    check_condition1,
    check_condition2,
    check_deletion_lemma,
    fano_turan_number,
    scan_splits,
    two_block_q,
    verify_extremality,
)

__version__ = "0.1.0"

__all__ = [
    "ADJACENCY",
    "SIGNLESS_LAPLACIAN",
    "ArgumentRangeError",
    "CompetitorRecord",
    "CriterionParams",
    "CriterionRecord",
    "DeletionCheck",
    "DimensionMismatchError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "EdgeArityError",
    "Embedding",
    "EmptyVertexSetError",
    "ExtremalityReport",
    "FormatError",
    "Hypergraph",
    "HyperqError",
    "IterationLimitError",
    "NegativeEntryError",
    "NoConvergenceError",
    "NotNormalizedError",
    "SpectralResult",
    "SplitProfile",
    "TooSmallError",
    "TwoColoring",
    "UniformityMismatchError",
    "VertexOutOfRangeError",
    "apply_adjacency",
    "apply_signless_laplacian",
    "bn_q_bounds",
    "bn_scan_q",
    "build_bn",
    "build_complete",
    "build_expansion",
    "build_fano",
    "build_two_part_complete",
    "check_condition1",
    "check_condition2",
    "check_deletion_lemma",
    "contains_subgraph",
    "delete_vertex",
    "eigen_residual",
    "fano_turan_number",
    "is_fano_free",
    "parse",
    "random_connected",
    "rayleigh_maximize_bruteforce",
    "rayleigh_q",
    "scan_splits",
    "serialize",
    "spectral_radius",
    "two_block_q",
    "two_coloring",
    "verify_extremality",
]
