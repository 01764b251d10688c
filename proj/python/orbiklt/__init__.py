"""Exact klt, discrepancy and orbifold-group computations for surface pairs."""

from ._core import (
    Error,
    InvalidArgument,
    NotNegativeDefinite,
    NotSpecial,
    ParseError,
    Unsupported,
    WrongClass,
    classify_germ,
    classify_graph,
    cover_split_tangent,
    curve_group,
    cyclic_invariants,
    enumerate_tangent_family,
    etale_cover_over_cusp,
    hj_evaluate,
    hj_expand,
    orbifold_base,
    run,
    solve_discrepancies,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "NotNegativeDefinite",
    "NotSpecial",
    "ParseError",
    "Unsupported",
    "WrongClass",
    "classify_germ",
    "classify_graph",
    "cover_split_tangent",
    "curve_group",
    "cyclic_invariants",
    "enumerate_tangent_family",
    "etale_cover_over_cusp",
    "hj_evaluate",
    "hj_expand",
    "orbifold_base",
    "run",
    "solve_discrepancies",
]
