"""Monomial ideals, Betti numbers, K-polynomials and homological shift ideals"""

from .ideal import MonomialIdeal, minimalize, polymatroidal_ideal
from .koszul import reduced_homology_ranks, upper_koszul_faces
from .betti import BettiTable, betti_table, hs_from_betti, is_linear, lcm_lattice_degrees
from .kpoly import k_polynomial_from_betti, k_polynomial_from_cave
from .shift_ideals import hs_ideal

__all__ = [
    "BettiTable",
    "MonomialIdeal",
    "betti_table",
    "hs_from_betti",
    "hs_ideal",
    "is_linear",
    "k_polynomial_from_betti",
    "k_polynomial_from_cave",
    "lcm_lattice_degrees",
    "minimalize",
    "polymatroidal_ideal",
    "reduced_homology_ranks",
    "upper_koszul_faces",
]
