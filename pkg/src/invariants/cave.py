"""
Cave polynomial of a polymatroid and its support check.

For each base point n, s_i(n) = 1 when n - e_i + e_j is a base point for
some j > i (i = 1, ..., p - 1). The base point contributes
t^n * prod over {i : s_i(n) = 1} of (1 - 1/t_i).
"""

from itertools import combinations
from typing import AbstractSet, Dict, List, Sequence

from loguru import logger

from src.polycore import Polymatroid, base_points, is_mconvex
from src.polyalg import SparsePoly, homogenize, support
from src.utils.errors import InvalidParameter, ZeroPolynomial
from src.utils.lattice_utils import LatticePoint
from .mobius import mobius


def _check_permutation(pi: Sequence[int], p: int) -> List[int]:
    pi = [int(x) for x in pi]
    if sorted(pi) != list(range(1, p + 1)):
        raise InvalidParameter(f"{pi} is not a permutation of [1, {p}]", witness=pi)
    return pi


def _exchange_indices(
    n: LatticePoint, bases: AbstractSet[LatticePoint], order: Sequence[int]
) -> List[int]:
    """0-based coordinates order[i] with s_i(n) = 1 under the given ordering"""
    p = len(n)
    active = []
    for a in range(p - 1):
        i = order[a]
        if n[i] == 0:
            continue
        for b in range(a + 1, p):
            j = order[b]
            moved = list(n)
            moved[i] -= 1
            moved[j] += 1
            if tuple(moved) in bases:
                active.append(i)
                break
    return active


def _expand(P: Polymatroid, order: Sequence[int]) -> SparsePoly:
    points = base_points(P)
    bases = points.members
    terms: Dict[LatticePoint, int] = {}

    for n in points:
        active = _exchange_indices(n, bases, order)
        for size in range(len(active) + 1):
            sign = (-1) ** size
            for T in combinations(active, size):
                exp = tuple(x - (1 if i in T else 0) for i, x in enumerate(n))
                terms[exp] = terms.get(exp, 0) + sign

    cave_poly = SparsePoly(P.p, terms)
    logger.debug(f"Cave polynomial from {len(points)} base points has {len(cave_poly)} terms")
    return cave_poly


def cave(P: Polymatroid) -> SparsePoly:
    """Cave polynomial, expanded per base point"""
    return _expand(P, list(range(P.p)))


def cave_permuted(P: Polymatroid, pi: Sequence[int]) -> SparsePoly:
    """
    Cave polynomial with the coordinate roles relabelled by a permutation.

    Args:
        P: Polymatroid
        pi: pi[k - 1] = pi(k), a permutation of 1..p

    Returns:
        The same polynomial as cave(P) for every permutation
    """
    pi = _check_permutation(pi, P.p)
    return _expand(P, [x - 1 for x in pi])


def cave_from_mobius(P: Polymatroid) -> SparsePoly:
    """sum over n of mu(n) t^n"""
    return SparsePoly(P.p, mobius(P).nonzero())


def generalized_polymatroid_check(f: SparsePoly) -> bool:
    """True when the support of the homogenization of f is M-convex"""
    if f.is_zero():
        raise ZeroPolynomial("The zero polynomial has empty support")
    return is_mconvex(support(homogenize(f)))
