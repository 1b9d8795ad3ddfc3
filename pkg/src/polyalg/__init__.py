"""Exact sparse polynomial arithmetic over the rationals"""

from .sparse_poly import (
    Exponent,
    SparsePoly,
    add,
    evaluate,
    linear_combination,
    negate,
    scale,
    subtract,
)
from .transforms import denormalize, homogenize, normalize, partial_derivative, support, twist

__all__ = [
    "Exponent",
    "SparsePoly",
    "add",
    "denormalize",
    "evaluate",
    "homogenize",
    "linear_combination",
    "negate",
    "normalize",
    "partial_derivative",
    "scale",
    "subtract",
    "support",
    "twist",
]
