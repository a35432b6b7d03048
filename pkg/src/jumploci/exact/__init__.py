"""Exact scalars, (Laurent) polynomials and linear algebra."""

from .matrix import (
    Matrix,
    determinant,
    minors,
    rank,
    rank_and_kernel,
    row_space_basis,
    rref,
    symbolic_rank,
)
from .poly import MultiPoly, poly_divides
from .scalar import (
    QuadNumber,
    Scalar,
    as_scalar,
    common_radicand,
    format_scalar,
    is_rational,
    parse_scalar,
    sqrt,
)

__all__ = [
    "Matrix",
    "MultiPoly",
    "QuadNumber",
    "Scalar",
    "as_scalar",
    "common_radicand",
    "determinant",
    "format_scalar",
    "is_rational",
    "minors",
    "parse_scalar",
    "poly_divides",
    "rank",
    "rank_and_kernel",
    "row_space_basis",
    "rref",
    "sqrt",
    "symbolic_rank",
]
