"""Exact finite-field linear algebra with a compiled kernel and a pure
Python fallback selected at import time."""

from .backend import BACKEND, rank_kernel, rank_kernel_generic
from .dense import (
    EchelonDecomposition,
    FpMatrix,
    echelon,
    format_matrix,
    inverse,
    is_prime,
    mat_add,
    mat_mul,
    mat_neg,
    mat_scale,
    mat_sub,
    nullity,
    nullspace,
    parse_matrix,
    random_invertible,
    random_matrix,
    rank,
    rank_generic,
    regular_witness,
    solve,
    subspace_dims,
)

__all__ = [
    "BACKEND",
    "EchelonDecomposition",
    "FpMatrix",
    "echelon",
    "format_matrix",
    "inverse",
    "is_prime",
    "mat_add",
    "mat_mul",
    "mat_neg",
    "mat_scale",
    "mat_sub",
    "nullity",
    "nullspace",
    "parse_matrix",
    "random_invertible",
    "random_matrix",
    "rank",
    "rank_generic",
    "rank_kernel",
    "rank_kernel_generic",
    "regular_witness",
    "solve",
    "subspace_dims",
]
