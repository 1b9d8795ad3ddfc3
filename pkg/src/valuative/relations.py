"""
Indicator-function relations among M-convex sets and the valuativity checks
built on them.

Relations are manufactured from hyperplane splits at integer thresholds:
1_S = 1_{S1} + 1_{S2} - 1_{S12}, where S1 and S2 are the two halves of S cut
by sum_{j in J} n_j = c and S12 is the slice on the hyperplane.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from config.config import Config
from src.invariants import cave, mobius
from src.polycore import PointSet, Polymatroid, dominates_base, is_mconvex, rank_from_points
from src.polyalg import SparsePoly
from src.utils.errors import (
    DimensionMismatch,
    EmptyPiece,
    InvalidParameter,
    NotMConvex,
    RelationInvalid,
)
from src.utils.lattice_utils import (
    box_points,
    componentwise_max,
    componentwise_min,
    mask_sum,
    mask_to_subset,
    subset_to_mask,
)


class Split(NamedTuple):
    s1: PointSet
    s2: PointSet
    s12: PointSet


@dataclass(frozen=True)
class Relation:
    """sum of a_i * 1_{S_i}, each S_i M-convex and all of one degree"""

    terms: Tuple[Tuple[int, PointSet], ...]

    @classmethod
    def of(cls, terms: Sequence[Tuple[int, PointSet]]) -> "Relation":
        if not terms:
            raise InvalidParameter("A relation needs at least one term")
        p = terms[0][1].p
        degrees = set()
        for position, (_, S) in enumerate(terms):
            if S.p != p:
                raise DimensionMismatch(
                    f"Term {position} lives in dimension {S.p}, expected {p}", witness=position
                )
            if not is_mconvex(S):
                raise NotMConvex(f"Term {position} is not M-convex", witness=position)
            degrees |= S.degrees()
        if len(degrees) != 1:
            raise InvalidParameter(
                "All terms of a relation must share one coordinate sum", witness=sorted(degrees)
            )
        return cls(tuple((int(a), S) for a, S in terms))

    @property
    def p(self) -> int:
        return self.terms[0][1].p

    def polymatroids(self) -> List[Tuple[int, Polymatroid]]:
        return [(a, rank_from_points(S)) for a, S in self.terms]


@dataclass(frozen=True)
class RelationCheck:
    ok: bool
    level: Optional[str] = None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ValuativeVerdict:
    """Residual of an invariant summed over a relation; ok when it vanishes"""

    ok: bool
    invariant: str
    residual: Any

    def __bool__(self) -> bool:
        return self.ok


# ===== Splits =====

def hyperplane_split(
    S: PointSet, J: Sequence[int], c: int, allow_trivial: bool = True
) -> Split:
    """
    Cut S by the hyperplane sum_{j in J} n_j = c.

    Args:
        S: M-convex point set
        J: Nonempty subset of [p], 1-based
        c: Integer threshold
        allow_trivial: Whether a split with S1 = S or S2 = S is acceptable

    Raises:
        NotMConvex: S or one of the pieces fails the exchange axiom
        EmptyPiece: the hyperplane misses S, or the split is trivial when
            that was not allowed
    """
    mask = subset_to_mask(J, S.p)
    if mask == 0:
        raise InvalidParameter("The cutting subset J must be nonempty")
    if not is_mconvex(S):
        raise NotMConvex("The set being split is not M-convex", witness="S")

    s1 = PointSet(S.p, tuple(n for n in S if mask_sum(n, mask) <= c))
    s2 = PointSet(S.p, tuple(n for n in S if mask_sum(n, mask) >= c))
    s12 = PointSet(S.p, tuple(n for n in S if mask_sum(n, mask) == c))

    if s12.is_empty():
        raise EmptyPiece(
            f"Hyperplane x({list(mask_to_subset(mask))}) = {c} misses the set",
            witness={"J": list(mask_to_subset(mask)), "c": c},
        )
    if not allow_trivial and (len(s1) == len(S) or len(s2) == len(S)):
        raise EmptyPiece(
            "Split is trivial: one side is the whole set",
            witness={"J": list(mask_to_subset(mask)), "c": c},
        )
    for name, piece in (("S1", s1), ("S2", s2), ("S12", s12)):
        if not is_mconvex(piece):
            raise NotMConvex(f"Piece {name} is not M-convex", witness=name)

    logger.debug(f"Split sizes |S1|={len(s1)}, |S2|={len(s2)}, |S12|={len(s12)}")
    return Split(s1, s2, s12)


def split_relation(S: PointSet, pieces: Split) -> Relation:
    """1_S - 1_{S1} - 1_{S2} + 1_{S12}"""
    return Relation.of([(1, S), (-1, pieces.s1), (-1, pieces.s2), (1, pieces.s12)])


def candidate_splits(S: PointSet) -> List[Tuple[Tuple[int, ...], int]]:
    """Every (J, c) with min x(J) < c < max x(J) whose pieces are all M-convex"""
    candidates = []
    for mask in range(1, 1 << S.p):
        values = [mask_sum(n, mask) for n in S]
        for c in range(min(values) + 1, max(values)):
            try:
                hyperplane_split(S, mask_to_subset(mask), c, allow_trivial=False)
            except (NotMConvex, EmptyPiece):
                continue
            candidates.append((mask_to_subset(mask), c))
    return candidates


class SplitCase(NamedTuple):
    name: str
    points: PointSet
    subset: Tuple[int, ...]
    threshold: int


def random_splits(
    named_sets: Sequence[Tuple[str, PointSet]],
    count: int = Config.VALUATIVE_SPLITS,
    seed: int = Config.DEFAULT_SEED,
) -> List[SplitCase]:
    """Seeded sample of non-degenerate splits drawn across several point sets"""
    pool = [
        SplitCase(name, S, J, c) for name, S in named_sets for J, c in candidate_splits(S)
    ]
    if not pool:
        return []
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(pool), size=min(count, len(pool)), replace=False)
    logger.debug(f"Drew {len(chosen)} of {len(pool)} candidate splits with seed {seed}")
    return [pool[int(k)] for k in chosen]


# ===== Relation checks =====

def _lattice_residual(R: Relation) -> Counter:
    residual: Counter = Counter()
    for a, S in R.terms:
        for n in S:
            residual[n] += a
    return residual


def _grid_residual(R: Relation) -> Optional[Tuple[Fraction, ...]]:
    """First point of the (1/D)Z^p grid in the bounding box where the real relation fails"""
    D = Config.SAMPLE_GRID_DENOMINATOR
    p = R.p
    everything = [n for _, S in R.terms for n in S]
    lower = np.array(componentwise_min(everything, p), dtype=np.int64) * D
    upper = np.array(componentwise_max(everything, p), dtype=np.int64) * D
    degree = sum(everything[0])

    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lower, upper)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, p)
    grid = grid[grid.sum(axis=1) == degree * D]

    total = np.zeros(len(grid), dtype=np.int64)
    for a, P in R.polymatroids():
        inside = (grid >= 0).all(axis=1)
        for mask in range(1, 1 << p):
            columns = [i for i in range(p) if mask >> i & 1]
            inside &= grid[:, columns].sum(axis=1) <= D * P.ranks[mask]
        total += a * inside.astype(np.int64)

    failing = np.flatnonzero(total)
    if failing.size == 0:
        return None
    return tuple(Fraction(int(x), D) for x in grid[failing[0]])


def check_relation(R: Relation) -> RelationCheck:
    """
    Verify sum a_i [n in S_i] = 0 at every lattice point, then on the
    rational grid (1/D)Z^p inside the bounding box against the rank
    inequalities of each piece.
    """
    residual = _lattice_residual(R)
    for point, value in residual.items():
        if value != 0:
            return RelationCheck(False, "lattice", list(point))

    witness = _grid_residual(R)
    if witness is not None:
        return RelationCheck(False, "grid", [str(x) for x in witness])
    return RelationCheck(True)


def _require_valid(R: Relation) -> None:
    check = check_relation(R)
    if not check:
        raise RelationInvalid(
            f"Indicator relation fails at the {check.level} level", witness=check.witness
        )


def valuative_check(R: Relation) -> ValuativeVerdict:
    """
    sum a_i cave(S_i) as an exact polynomial; ok when it is zero.

    Raises:
        RelationInvalid: if the relation itself does not hold
    """
    _require_valid(R)
    residual = SparsePoly.zero(R.p)
    for a, P in R.polymatroids():
        residual = residual + cave(P).scale(a)
    return ValuativeVerdict(residual.is_zero(), "cave", residual)


def mobius_valuative_check(R: Relation) -> ValuativeVerdict:
    """sum a_i mu_{S_i}(n) = 0 pointwise"""
    _require_valid(R)
    totals: Dict[Tuple[int, ...], int] = {}
    for a, P in R.polymatroids():
        for n, value in mobius(P).items():
            totals[n] = totals.get(n, 0) + a * value
    residual = {n: v for n, v in sorted(totals.items()) if v != 0}
    return ValuativeVerdict(not residual, "mobius", residual)


def hilbert_valuative_check(R: Relation) -> ValuativeVerdict:
    """sum a_i dim [I_{S_i}]_n = 0 for every n in the box below the largest point"""
    _require_valid(R)
    pieces = R.polymatroids()
    upper = componentwise_max((n for _, S in R.terms for n in S), R.p)
    residual = {}
    for n in box_points((0,) * R.p, upper):
        value = sum(a * dominates_base(P, n) for a, P in pieces)
        if value != 0:
            residual[n] = value
    return ValuativeVerdict(not residual, "hilbert", residual)
