"""
K-polynomials of polymatroidal ideals, by the Betti route and by twisting the
cave polynomial of the dual.
"""

from typing import Dict, Optional, Sequence

from src.invariants import cave
from src.polycore import Polymatroid, dual
from src.polyalg import SparsePoly, twist
from src.utils.lattice_utils import LatticePoint
from .betti import BettiTable


def k_polynomial_from_betti(table: BettiTable) -> SparsePoly:
    """sum of (-1)^i beta_{i,b} t^b"""
    terms: Dict[LatticePoint, int] = {}
    for (i, b), value in table.entries.items():
        terms[b] = terms.get(b, 0) + (-1) ** i * value
    return SparsePoly(table.nvars, terms)


def k_polynomial_from_cave(P: Polymatroid, cage: Optional[Sequence[int]] = None) -> SparsePoly:
    """
    t^m * cave of the dual at (1/t_1, ..., 1/t_p).

    Raises:
        CageTooSmall: if the cage is not legal for P
    """
    cage = P.cage if cage is None else tuple(cage)
    return twist(cave(dual(P, cage)), cage)
