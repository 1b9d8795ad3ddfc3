"""
The polymatroid data model: rank-function validation, lattice points of the
base and independence polytopes, membership queries and duality.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from config.config import Config
from src.utils.errors import (
    AxiomViolation,
    CageTooSmall,
    InvalidParameter,
    MissingSubset,
    NotMConvex,
)
from src.utils.lattice_utils import (
    LatticePoint,
    check_dimension,
    mask_sum,
    mask_to_subset,
    nonempty_masks,
    subset_to_mask,
    subtract,
)
from .point_set import PointSet, is_mconvex

SubsetLike = Union[int, Iterable[int]]


@dataclass(frozen=True)
class Polymatroid:
    """
    A validated polymatroid on [p].

    `ranks` is indexed by subset bitmask (element i <-> bit i - 1), with
    ranks[0] = 0 for the empty set. Build instances through `validate` or the
    constructors in `builders`; the raw constructor does not check axioms.
    """

    p: int
    cage: Tuple[int, ...]
    ranks: Tuple[int, ...]

    def rank(self, subset: SubsetLike) -> int:
        """Rank of a subset given as 1-based indices or as a bitmask"""
        mask = subset if isinstance(subset, int) else subset_to_mask(subset, self.p)
        return self.ranks[mask]

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    @property
    def total_rank(self) -> int:
        return self.ranks[self.full_mask]

    def singleton_ranks(self) -> Tuple[int, ...]:
        return tuple(self.ranks[1 << i] for i in range(self.p))

    def rank_table(self) -> Dict[Tuple[int, ...], int]:
        """Nonempty subsets (ascending index tuples) -> rank"""
        return {mask_to_subset(mask): self.ranks[mask] for mask in nonempty_masks(self.p)}

    def with_cage(self, cage: Sequence[int]) -> "Polymatroid":
        check_dimension(cage, self.p)
        _check_cage(self.ranks, tuple(cage), self.p)
        return Polymatroid(self.p, tuple(cage), self.ranks)


def _check_cage(ranks: Sequence[int], cage: Tuple[int, ...], p: int) -> None:
    for i in range(p):
        if ranks[1 << i] > cage[i]:
            raise CageTooSmall(
                f"rk({{{i + 1}}}) = {ranks[1 << i]} exceeds cage entry m_{i + 1} = {cage[i]}",
                witness={"index": i + 1, "rank": ranks[1 << i], "cage": cage[i]},
            )


def _check_axioms(ranks: Sequence[int], p: int) -> None:
    full = (1 << p) - 1
    for mask in range(1, full + 1):
        if ranks[mask] < 0:
            raise AxiomViolation(
                "normalization",
                f"rk({list(mask_to_subset(mask))}) = {ranks[mask]} is negative",
                witness={"subset": list(mask_to_subset(mask))},
            )

    # Monotonicity reduces to single-element extensions
    for mask in range(full + 1):
        for i in range(p):
            bigger = mask | (1 << i)
            if bigger != mask and ranks[mask] > ranks[bigger]:
                raise AxiomViolation(
                    "monotonicity",
                    f"rk({list(mask_to_subset(mask))}) = {ranks[mask]} > "
                    f"rk({list(mask_to_subset(bigger))}) = {ranks[bigger]}",
                    witness={
                        "subset": list(mask_to_subset(mask)),
                        "superset": list(mask_to_subset(bigger)),
                    },
                )

    for first in range(full + 1):
        for second in range(first + 1, full + 1):
            meet, join = first & second, first | second
            if ranks[meet] + ranks[join] > ranks[first] + ranks[second]:
                raise AxiomViolation(
                    "submodularity",
                    f"rk(J1 ∩ J2) + rk(J1 ∪ J2) = {ranks[meet] + ranks[join]} exceeds "
                    f"rk(J1) + rk(J2) = {ranks[first] + ranks[second]}",
                    witness={
                        "J1": list(mask_to_subset(first)),
                        "J2": list(mask_to_subset(second)),
                    },
                )


def validate(
    p: int,
    rank: Mapping[Tuple[int, ...], int],
    cage: Optional[Sequence[int]] = None,
) -> Polymatroid:
    """
    Validate a rank table and build a Polymatroid.

    Args:
        p: Ground-set size, 1 <= p <= Config.MAX_GROUND_SET
        rank: Total mapping from nonempty subsets (iterables of 1-based
            indices) to nonnegative integers
        cage: Optional cage vector; defaults to the singleton ranks

    Returns:
        The validated Polymatroid

    Raises:
        MissingSubset: the rank table is not total
        AxiomViolation: an axiom fails, with the witnessing subsets
        CageTooSmall: rk({i}) > m_i
    """
    if not 1 <= p <= Config.MAX_GROUND_SET:
        raise InvalidParameter(
            f"Ground-set size must lie in [1, {Config.MAX_GROUND_SET}], got {p}", witness=p
        )

    table: List[Optional[int]] = [None] * (1 << p)
    table[0] = 0
    for subset, value in rank.items():
        mask = subset_to_mask(subset, p)
        if mask == 0:
            if value != 0:
                raise AxiomViolation("normalization", f"rk(∅) must be 0, got {value}")
            continue
        table[mask] = int(value)

    missing = [list(mask_to_subset(mask)) for mask in nonempty_masks(p) if table[mask] is None]
    if missing:
        raise MissingSubset(
            f"Rank table is missing {len(missing)} of {(1 << p) - 1} nonempty subsets",
            witness=missing,
        )

    ranks = tuple(table)  # type: ignore[arg-type]
    _check_axioms(ranks, p)

    if cage is None:
        cage = tuple(ranks[1 << i] for i in range(p))
    else:
        check_dimension(cage, p)
        cage = tuple(int(m) for m in cage)
    _check_cage(ranks, cage, p)

    return Polymatroid(p, cage, ranks)


def from_rank_function(
    p: int,
    rank_of: Callable[[Tuple[int, ...]], int],
    cage: Optional[Sequence[int]] = None,
) -> Polymatroid:
    """Validate a rank function given as a callable on ascending index tuples"""
    table = {mask_to_subset(mask): rank_of(mask_to_subset(mask)) for mask in nonempty_masks(p)}
    return validate(p, table, cage)


# ===== Lattice points =====

def _lattice_points(P: Polymatroid, exact_total: bool) -> List[LatticePoint]:
    """Depth-first enumeration with prefix pruning on all subset inequalities"""
    p = P.p
    bounds = [min(P.cage[i], P.ranks[1 << i]) for i in range(p)]
    total = P.total_rank
    found: List[LatticePoint] = []
    point = [0] * p

    def feasible_prefix(k: int) -> bool:
        # only subsets whose largest element is k can have become tight
        top = 1 << k
        for lower in range(top):
            mask = lower | top
            if mask_sum(point, mask) > P.ranks[mask]:
                return False
        return True

    def descend(k: int, running: int) -> None:
        if k == p:
            if not exact_total or running == total:
                found.append(tuple(point))
            return
        for value in range(bounds[k] + 1):
            if exact_total and running + value > total:
                break
            point[k] = value
            if feasible_prefix(k):
                descend(k + 1, running + value)
        point[k] = 0

    descend(0, 0)
    return found


def base_points(P: Polymatroid) -> PointSet:
    """Lattice points of the base polytope B(P)"""
    points = _lattice_points(P, exact_total=True)
    logger.debug(f"Base polytope of rank {P.total_rank} has {len(points)} lattice points")
    return PointSet(P.p, tuple(sorted(points)))


def independence_points(P: Polymatroid) -> PointSet:
    """Lattice points of the independence polytope I(P)"""
    points = _lattice_points(P, exact_total=False)
    logger.debug(f"Independence polytope on [{P.p}] has {len(points)} lattice points")
    return PointSet(P.p, tuple(sorted(points)))


def contains_independent(P: Polymatroid, n: Sequence[int]) -> bool:
    """Membership of n in I(P) ∩ Z^p; negative coordinates are outside"""
    check_dimension(n, P.p)
    if any(x < 0 for x in n):
        return False
    return all(mask_sum(n, mask) <= P.ranks[mask] for mask in range(1, P.full_mask + 1))


def contains_base(P: Polymatroid, n: Sequence[int]) -> bool:
    """Membership of n in B(P) ∩ Z^p"""
    check_dimension(n, P.p)
    return sum(n) == P.total_rank and contains_independent(P, n)


def dominates_base(P: Polymatroid, n: Sequence[int]) -> int:
    """
    1 if some base point w satisfies w <= n, else 0.

    This is the dimension of the degree-n piece of the polymatroidal ideal.
    """
    check_dimension(n, P.p)
    if any(x < 0 for x in n):
        return 0
    # max{|w| : w in I(P), w <= n} = min over J of rk(J) + sum_{j not in J} n_j
    full = P.full_mask
    best = min(P.ranks[mask] + mask_sum(n, full ^ mask) for mask in range(full + 1))
    return 1 if best >= P.total_rank else 0


def is_matroid(P: Polymatroid) -> bool:
    return all(m == 1 for m in P.cage)


# ===== Duality =====

def dual(P: Polymatroid, cage: Optional[Sequence[int]] = None) -> Polymatroid:
    """
    Dual polymatroid m - P with respect to a cage.

    rk_dual(J) = sum_{j in J} m_j + rk([p] \\ J) - rk([p]).
    """
    cage = P.cage if cage is None else tuple(int(m) for m in cage)
    check_dimension(cage, P.p)
    _check_cage(P.ranks, cage, P.p)

    full = P.full_mask
    total = P.total_rank
    ranks = tuple(
        mask_sum(cage, mask) + P.ranks[full ^ mask] - total for mask in range(full + 1)
    )
    _check_axioms(ranks, P.p)
    return Polymatroid(P.p, cage, ranks)


def dual_points(P: Polymatroid, cage: Optional[Sequence[int]] = None) -> PointSet:
    """Reflection route to the dual: {m - n : n in B(P)}"""
    cage = P.cage if cage is None else tuple(int(m) for m in cage)
    check_dimension(cage, P.p)
    _check_cage(P.ranks, cage, P.p)
    return PointSet.of(P.p, (subtract(cage, n) for n in base_points(P)))


def rank_from_points(points: PointSet, cage: Optional[Sequence[int]] = None) -> Polymatroid:
    """
    Recover the unique polymatroid whose base points are an M-convex set.

    rk(J) = max over points of the coordinate sum over J.
    """
    if not is_mconvex(points):
        raise NotMConvex(
            f"Point set of size {len(points)} is not M-convex", witness=[list(n) for n in points]
        )
    p = points.p
    if p > Config.MAX_GROUND_SET:
        raise InvalidParameter(f"Ground-set size {p} exceeds {Config.MAX_GROUND_SET}", witness=p)
    ranks = tuple(
        max(mask_sum(n, mask) for n in points) if mask else 0 for mask in range(1 << p)
    )
    if cage is None:
        cage = tuple(ranks[1 << i] for i in range(p))
    else:
        check_dimension(cage, p)
        cage = tuple(int(m) for m in cage)
    _check_cage(ranks, cage, p)
    return Polymatroid(p, cage, ranks)
