"""Lorentzian and denormalized Lorentzian polynomial checks"""

from .signature import SymmetricMatrix, inertia, positive_eigenvalue_count
from .checker import (
    TARGETS,
    LorentzianVerdict,
    hessian,
    is_denormalized_lorentzian,
    is_lorentzian,
    lorentzian_target,
    sign_change,
)

__all__ = [
    "LorentzianVerdict",
    "SymmetricMatrix",
    "TARGETS",
    "hessian",
    "inertia",
    "is_denormalized_lorentzian",
    "is_lorentzian",
    "lorentzian_target",
    "positive_eigenvalue_count",
    "sign_change",
]
