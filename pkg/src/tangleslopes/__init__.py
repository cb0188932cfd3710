"""Candidate boundary slopes of algebraic tangle closures.

Rational tangles combine by sum and product; closing the result gives an
arborescent knot. Surfaces in the complement are tracked as edgepaths in
the (u, v) strip with integer weight triples, glued across tangle sums,
pushed through the rotation transform at products, and closed at the
axis. The slope of each surviving system is its twist number relative to
the Seifert reference. Everything is exact rational arithmetic.

>>> from tangleslopes import kn, solve_sn
>>> rep = solve_sn(kn(2))
>>> [str(s) for s in rep.certified]
['-14', '14']
"""

from .diagram import (
    DiagramPoint,
    WeightState,
    is_edge,
    parents,
    uv_coords,
    vertex_point,
    vertex_triple,
)
from .edgepaths import (
    ConstantPath,
    VertexPath,
    constant_path,
    endpoint_point,
    endpoint_state,
    enumerate_paths,
    tau,
    validate,
)
from .errors import (
    CasePreconditionViolated,
    DegeneratePoint,
    FamilyRange,
    FractionalEndpoint,
    Infeasible,
    MismatchedWeights,
    ParseError,
    SeifertUndefined,
    TangleSlopesError,
    UndefinedCase,
    UnsupportedShape,
    ZeroDenominator,
)
from .plotting import render_svg, render_tsv
from .slopes import (
    CandidateSystem,
    NodeTrace,
    boundary_slope,
    build_system,
    replay,
    seifert_leaf_path,
    seifert_system,
    seifert_tau,
    tau_product,
    tau_sum,
    verify_system,
)
from .solver import (
    SlopeReport,
    default_c_bound,
    kn_system,
    report,
    solve,
    solve_montesinos,
    solve_sn,
)
from .tangles import (
    Leaf,
    Product,
    Sum,
    TangleExpr,
    crossing_count,
    family_crossing_count,
    family_index,
    kn,
    mirror,
    montesinos_factors,
    parse,
    render,
)
from .transforms import TransformOutcome, common_scaling, glue_sum, rotate_reflect

__version__ = "0.1.0"

__all__ = [
    "CandidateSystem",
    "CasePreconditionViolated",
    "ConstantPath",
    "DegeneratePoint",
    "DiagramPoint",
    "FamilyRange",
    "FractionalEndpoint",
    "Infeasible",
    "Leaf",
    "MismatchedWeights",
    "NodeTrace",
    "ParseError",
    "Product",
    "SeifertUndefined",
    "SlopeReport",
    "Sum",
    "TangleExpr",
    "TangleSlopesError",
    "TransformOutcome",
    "UndefinedCase",
    "UnsupportedShape",
    "VertexPath",
    "WeightState",
    "ZeroDenominator",
    "boundary_slope",
    "build_system",
    "common_scaling",
    "constant_path",
    "crossing_count",
    "default_c_bound",
    "endpoint_point",
    "endpoint_state",
    "enumerate_paths",
    "family_crossing_count",
    "family_index",
    "glue_sum",
    "is_edge",
    "kn",
    "kn_system",
    "mirror",
    "montesinos_factors",
    "parents",
    "parse",
    "render",
    "render_svg",
    "render_tsv",
    "replay",
    "report",
    "rotate_reflect",
    "seifert_leaf_path",
    "seifert_system",
    "seifert_tau",
    "solve",
    "solve_montesinos",
    "solve_sn",
    "tau",
    "tau_product",
    "tau_sum",
    "uv_coords",
    "validate",
    "verify_system",
    "vertex_point",
    "vertex_triple",
    "__version__",
]
