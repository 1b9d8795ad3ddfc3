"""Utilities package"""

from .errors import (
    AxiomViolation,
    CageTooSmall,
    CrossCheckMismatch,
    DimensionMismatch,
    EmptyIdeal,
    EmptyPiece,
    InvalidParameter,
    MalformedInput,
    MissingSubset,
    NegativeExponent,
    NotMConvex,
    NotSymmetric,
    PolymatroidError,
    RelationInvalid,
    UnknownFixture,
    ZeroPolynomial,
)
from .lattice_utils import (
    LatticePoint,
    dominates,
    mask_sum,
    mask_to_subset,
    nonempty_masks,
    parse_subset_key,
    parse_vector,
    subset_key,
    subset_to_mask,
    unit_vector,
)

__all__ = [
    'AxiomViolation',
    'CageTooSmall',
    'CrossCheckMismatch',
    'DimensionMismatch',
    'EmptyIdeal',
    'EmptyPiece',
    'InvalidParameter',
    'LatticePoint',
    'MalformedInput',
    'MissingSubset',
    'NegativeExponent',
    'NotMConvex',
    'NotSymmetric',
    'PolymatroidError',
    'RelationInvalid',
    'UnknownFixture',
    'ZeroPolynomial',
    'dominates',
    'mask_sum',
    'mask_to_subset',
    'nonempty_masks',
    'parse_subset_key',
    'parse_vector',
    'subset_key',
    'subset_to_mask',
    'unit_vector',
]
