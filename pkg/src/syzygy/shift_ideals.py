"""Homological shift ideals of polymatroidal ideals through the dual Möbius function"""

from typing import Optional, Sequence

from loguru import logger

from src.invariants import mobius
from src.polycore import Polymatroid, dual
from src.utils.errors import InvalidParameter
from .ideal import MonomialIdeal


def hs_ideal(P: Polymatroid, cage: Optional[Sequence[int]] = None, i: int = 0) -> MonomialIdeal:
    """
    HS_i(I_P), generated by x^n with |n| = rk(P) + i and mu_dual(m - n) != 0.

    An index beyond the projective dimension yields the zero ideal.
    """
    if i < 0:
        raise InvalidParameter(f"Homological index must be nonnegative, got {i}", witness=i)
    cage = P.cage if cage is None else tuple(int(m) for m in cage)
    table = mobius(dual(P, cage))

    target = sum(cage) - P.total_rank - i
    gens = [
        tuple(m - w for m, w in zip(cage, point))
        for point, value in table.items()
        if value != 0 and sum(point) == target
    ]
    if not gens:
        logger.warning(f"HS_{i} is the zero ideal (index beyond the projective dimension)")
    return MonomialIdeal.of(P.p, gens)
