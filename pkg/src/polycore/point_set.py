"""
Finite sets of lattice points in N^p and the discrete-convexity operations
on them: M-convexity, translation, truncation and down-closure.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import AbstractSet, FrozenSet, Iterable, Iterator, Sequence, Tuple

from loguru import logger

from src.utils.errors import DimensionMismatch, InvalidParameter
from src.utils.lattice_utils import LatticePoint, check_dimension, dominates, subtract


@dataclass(frozen=True)
class PointSet:
    """Deduplicated, lexicographically sorted set of points of N^p"""

    p: int
    points: Tuple[LatticePoint, ...]
    _members: FrozenSet[LatticePoint] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.points))

    @classmethod
    def of(cls, p: int, points: Iterable[Sequence[int]]) -> "PointSet":
        """Build a PointSet, validating dimensions and nonnegativity"""
        if p < 1:
            raise InvalidParameter(f"Ambient dimension must be positive, got {p}", witness=p)
        canonical = set()
        for point in points:
            point = tuple(int(x) for x in point)
            if len(point) != p:
                raise DimensionMismatch(
                    f"Point {list(point)} does not have {p} coordinates", witness=list(point)
                )
            if any(x < 0 for x in point):
                raise InvalidParameter(
                    f"Point {list(point)} has a negative coordinate", witness=list(point)
                )
            canonical.add(point)
        return cls(p, tuple(sorted(canonical)))

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self._members

    @property
    def members(self) -> AbstractSet[LatticePoint]:
        return self._members

    def is_empty(self) -> bool:
        return not self.points

    def degrees(self) -> FrozenSet[int]:
        """Distinct coordinate sums"""
        return frozenset(sum(point) for point in self.points)


def is_mconvex(points: PointSet) -> bool:
    """
    Check the symmetric exchange axiom.

    For all a, b in S and every i with a_i > b_i there must be a j with
    a_j < b_j and a - e_i + e_j in S. Empty sets and sets with mixed
    coordinate sums are not M-convex.
    """
    if points.is_empty() or len(points.degrees()) != 1:
        return False

    members = points.members
    p = points.p
    for a, b in product(points.points, repeat=2):
        for i in range(p):
            if a[i] <= b[i]:
                continue
            exchanged = False
            for j in range(p):
                if a[j] < b[j]:
                    candidate = list(a)
                    candidate[i] -= 1
                    candidate[j] += 1
                    if tuple(candidate) in members:
                        exchanged = True
                        break
            if not exchanged:
                logger.debug(f"Exchange fails for a={a}, b={b}, i={i + 1}")
                return False
    return True


def _check_offset(points: PointSet, b: Sequence[int]) -> Tuple[int, ...]:
    check_dimension(b, points.p)
    b = tuple(b)
    if any(x < 0 for x in b):
        raise InvalidParameter(f"Offset {list(b)} must lie in N^p", witness=list(b))
    return b


def truncate(points: PointSet, b: Sequence[int]) -> PointSet:
    """{n in S : n >= b}"""
    b = _check_offset(points, b)
    result = PointSet(points.p, tuple(n for n in points if dominates(n, b)))
    if result.is_empty():
        logger.warning(f"Truncation at {list(b)} is empty")
    return result


def translate_minus(points: PointSet, b: Sequence[int]) -> PointSet:
    """{n - b : n in S, n >= b}"""
    b = _check_offset(points, b)
    shifted = tuple(subtract(n, b) for n in points if dominates(n, b))
    if not shifted:
        logger.warning(f"Translation by -{list(b)} is empty")
    return PointSet(points.p, tuple(sorted(shifted)))


def down_closure(points: PointSet) -> PointSet:
    """All lattice points of N^p dominated by some point of S"""
    closure = set()
    for top in points:
        closure.update(product(*(range(x + 1) for x in top)))
    return PointSet(points.p, tuple(sorted(closure)))
