"""Exact rational substrate: linear algebra, hull membership, min-norm point."""

from .hull import INSIDE, OUTSIDE, HullCertificate, cone_coefficients, origin_in_hull
from .linalg import (
    ONE,
    ZERO,
    Rational,
    Vector,
    add,
    affinely_independent,
    combination,
    complement_basis,
    primitive,
    primitive_scale,
    coordinates_in,
    dot,
    independent_subset,
    is_zero,
    kernel_basis,
    norm2,
    null_space_vector,
    project_complement,
    q,
    rank,
    rref,
    scale,
    solve_linear,
    sub,
    transpose,
    vec,
    zeros,
)
from .minnorm import MinNormResult, min_norm_point

__all__ = [
    "INSIDE", "OUTSIDE", "HullCertificate", "cone_coefficients", "origin_in_hull",
    "ONE", "ZERO", "Rational", "Vector", "add", "affinely_independent", "combination",
    "complement_basis", "coordinates_in", "primitive", "primitive_scale", "dot", "independent_subset", "is_zero",
    "kernel_basis", "norm2", "null_space_vector", "project_complement", "q", "rank",
    "rref", "scale", "solve_linear", "sub", "transpose", "vec", "zeros",
    "MinNormResult", "min_norm_point",
]
