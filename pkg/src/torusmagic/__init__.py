"""Supermagic labelings of torus grids C_n x C_m.

A supermagic labeling assigns the numbers 1..q bijectively to the q = 2nm
edges so that the four labels at every vertex sum to the same constant,
necessarily 4nm+2.  The package provides:

  * direct constructions for odd n,m with gcd(n,m) > 1 and for even n,m,
    built diagonal by diagonal (`construct`);
  * a verifier for arbitrary labelings and a corner-level audit of the
    construction's partial weights (`verify`, `audit_corners`);
  * the diagonal cycle decomposition underlying the constructions
    (`decompose`, `diagonal_of_edge`);
  * an exact backtracking search with unit propagation for the shapes the
    constructions do not cover (`search`, `enumerate_completions`);
  * JSON/edge-list serialization, DOT/SVG figures, and a command-line
    front end (`encode`, `decode`, `render`, console script `torusmagic`).
"""

from .construct import (
    EVEN_EVEN,
    ODD_ODD,
    ConstructionPlan,
    ExpectedCornerTable,
    PlanShapeMismatch,
    Unsupported,
    UnsupportedShape,
    construct,
    construct_even_even,
    construct_odd_odd,
    expected_corner_table,
    plan_for,
)
from .diagonals import (
    CornerPos,
    Diagonal,
    InvalidStartColumn,
    corner_vertex,
    decompose,
    diagonal,
    diagonal_of_edge,
)
from .grid import (
    DimensionTooSmall,
    EdgeRef,
    GridDims,
    VertexRef,
    all_edges,
    all_vertices,
    dims,
    incident_edges,
    wrap,
)
from .labeling import DomainMismatch, Labeling
from .render import RenderSpec, render
from .search import (
    BUDGET_EXCEEDED,
    EXHAUSTED,
    FOUND,
    PartialLabeling,
    SearchConfig,
    SearchOutcome,
    SearchStats,
    enumerate_completions,
    feasible_completion,
    forced_label,
    search,
)
from .serialize import ParseError, ShapeError, decode, encode
from .verify import (
    CornerAuditReport,
    VerificationReport,
    audit_corners,
    forced_constant,
    verify,
    vertex_weight,
    weight_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXCEEDED",
    "ConstructionPlan",
    "CornerAuditReport",
    "CornerPos",
    "Diagonal",
    "DimensionTooSmall",
    "DomainMismatch",
    "EVEN_EVEN",
    "EXHAUSTED",
    "EdgeRef",
    "ExpectedCornerTable",
    "FOUND",
    "GridDims",
    "InvalidStartColumn",
    "Labeling",
    "ODD_ODD",
    "ParseError",
    "PartialLabeling",
    "PlanShapeMismatch",
    "RenderSpec",
    "SearchConfig",
    "SearchOutcome",
    "SearchStats",
    "ShapeError",
    "Unsupported",
    "UnsupportedShape",
    "VerificationReport",
    "VertexRef",
    "all_edges",
    "all_vertices",
    "audit_corners",
    "construct",
    "construct_even_even",
    "construct_odd_odd",
    "corner_vertex",
    "decode",
    "decompose",
    "diagonal",
    "diagonal_of_edge",
    "dims",
    "encode",
    "enumerate_completions",
    "expected_corner_table",
    "feasible_completion",
    "forced_constant",
    "forced_label",
    "incident_edges",
    "plan_for",
    "render",
    "search",
    "verify",
    "vertex_weight",
    "weight_matrix",
    "wrap",
]
