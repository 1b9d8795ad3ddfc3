"""Möbius functions, cave and Snapper polynomials of polymatroids"""

from .mobius import MobiusTable, mobius, mobius_by_definition, mobius_support
from .cave import cave, cave_from_mobius, cave_permuted, generalized_polymatroid_check
from .snapper import (
    binomial_coefficients,
    binomial_transform,
    snapper,
    snapper_box_failures,
    snapper_value,
)

__all__ = [
    "MobiusTable",
    "binomial_coefficients",
    "binomial_transform",
    "cave",
    "cave_from_mobius",
    "cave_permuted",
    "generalized_polymatroid_check",
    "mobius",
    "mobius_by_definition",
    "mobius_support",
    "snapper",
    "snapper_box_failures",
    "snapper_value",
]
