"""
Möbius function of a polymatroid on the lattice points of its independence
polytope.

mu(n) = 1 on base points, and for the other independent points
mu(n) = 1 - sum of mu(w) over independent w >= n with w != n.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from loguru import logger

from src.polycore import Polymatroid, PointSet, base_points, independence_points
from src.utils.lattice_utils import LatticePoint, dominates


@dataclass(frozen=True)
class MobiusTable:
    """Möbius values on I(P) ∩ N^p; points outside the domain read as 0"""

    p: int
    values: Mapping[LatticePoint, int]

    def __getitem__(self, point: Sequence[int]) -> int:
        return self.values.get(tuple(point), 0)

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> List[Tuple[LatticePoint, int]]:
        """Entries in ascending lexicographic order"""
        return sorted(self.values.items())

    def __iter__(self) -> Iterator[Tuple[LatticePoint, int]]:
        return iter(self.items())

    def support(self) -> PointSet:
        return PointSet(self.p, tuple(sorted(n for n, v in self.values.items() if v != 0)))

    def total(self) -> int:
        return sum(self.values.values())

    def nonzero(self) -> Dict[LatticePoint, int]:
        return {n: v for n, v in self.values.items() if v != 0}


def _upward_offsets(p: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """(sign, e_S) for every subset S of [p]"""
    offsets = []
    for size in range(p + 1):
        for S in combinations(range(p), size):
            offsets.append(((-1) ** size, tuple(1 if i in S else 0 for i in range(p))))
    return offsets


def mobius(P: Polymatroid) -> MobiusTable:
    """
    Möbius table of P in closed form.

    Summing the recursion over the up-set of n shows that
    sum_{w >= n, w in I} mu(w) equals 1 on every independent point. Inverting
    that identity over the product-of-chains order gives the closed form
    mu(n) = sum over S of (-1)^|S| [n + e_S in I], which is what is evaluated.
    """
    independent = independence_points(P)
    members = independent.members
    offsets = _upward_offsets(P.p)

    def above(n: LatticePoint, shift: Tuple[int, ...]) -> bool:
        return tuple(a + b for a, b in zip(n, shift)) in members

    values: Dict[LatticePoint, int] = {
        n: sum(sign for sign, shift in offsets if above(n, shift)) for n in independent
    }

    logger.debug(
        f"Möbius table over {len(values)} independent points, "
        f"{sum(1 for v in values.values() if v)} nonzero"
    )
    return MobiusTable(P.p, values)


def mobius_by_definition(P: Polymatroid) -> MobiusTable:
    """Literal recursion in descending coordinate sum; quadratic in |I(P)|"""
    independent = list(independence_points(P))
    bases = base_points(P).members
    values: Dict[LatticePoint, int] = {}

    for n in sorted(independent, key=sum, reverse=True):
        if n in bases:
            values[n] = 1
            continue
        above = sum(values[w] for w in values if w != n and dominates(w, n))
        values[n] = 1 - above

    return MobiusTable(P.p, values)


def mobius_support(P: Polymatroid) -> PointSet:
    """Points where the Möbius function does not vanish"""
    return mobius(P).support()
