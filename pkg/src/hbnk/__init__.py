"""Bipartite Kneser B type-k graphs.

Construction of H_B(n, k), exact closed-form invariants, and
independent graph-algorithmic oracles for cross-validation.
"""

from .core import (
    DEFAULT_VERTEX_CEILING,
    MAX_N,
    CapacityError,
    GroundParams,
    KneserBGraph,
    SignedVertex,
    build_graph,
    enumerate_vertices,
    is_adjacent,
    magnitude_set,
    vertex_table,
)
from .formulas import NOT_COVERED, DomainError
from .report import (
    GridReport,
    InvariantEntry,
    VerificationReport,
    compute_invariants,
    run_reference_table,
    verify_grid,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DEFAULT_VERTEX_CEILING",
    "DomainError",
    "GridReport",
    "GroundParams",
    "InvariantEntry",
    "VerificationReport",
    "KneserBGraph",
    "MAX_N",
    "NOT_COVERED",
    "SignedVertex",
    "build_graph",
    "compute_invariants",
    "enumerate_vertices",
    "is_adjacent",
    "magnitude_set",
    "run_reference_table",
    "verify_grid",
    "vertex_table",
    "__version__",
]
