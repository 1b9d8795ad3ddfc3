"""
Constructors for the fixture corpus: uniform polymatroids, graphic matroids,
restriction polymatroids of a matroid, direct sums and the rank-zero case.
"""

from typing import Callable, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from loguru import logger

from src.utils.errors import InvalidParameter
from src.utils.lattice_utils import mask_to_subset
from .polymatroid import Polymatroid, from_rank_function, validate

Edge = Tuple[Hashable, Hashable]
MatroidRank = Callable[[FrozenSet[Hashable]], int]


def uniform(p: int, weights: Sequence[int], r: int) -> Polymatroid:
    """
    Uniform polymatroid rk(J) = min(r, sum_{j in J} m_j) with cage m.

    Raises:
        InvalidParameter: negative weights, wrong length, or r outside [0, |m|]
    """
    weights = tuple(int(m) for m in weights)
    if len(weights) != p:
        raise InvalidParameter(f"Expected {p} weights, got {len(weights)}", witness=list(weights))
    if any(m < 0 for m in weights):
        raise InvalidParameter("Weights must be nonnegative", witness=list(weights))
    if not 0 <= r <= sum(weights):
        raise InvalidParameter(
            f"Rank {r} must lie in [0, {sum(weights)}]", witness={"r": r, "weights": list(weights)}
        )
    return from_rank_function(p, lambda J: min(r, sum(weights[j - 1] for j in J)), cage=weights)


def graphic_rank_oracle(edges: Sequence[Edge]) -> Callable[[Sequence[int]], int]:
    """
    Cycle-matroid rank on 0-based edge-index sets: |V| - #components(V, A).

    Every vertex touched by some edge counts; isolated vertices of the whole
    graph do not change any rank.
    """
    edges = list(edges)

    def rank_of(indices: Sequence[int]) -> int:
        parent = {}

        def find(v):
            root = v
            while parent.setdefault(root, root) != root:
                root = parent[root]
            while parent[v] != root:
                parent[v], v = root, parent[v]
            return root

        rank = 0
        for index in indices:
            u, v = edges[index]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank

    return rank_of


def graphic(edges: Sequence[Edge]) -> Polymatroid:
    """Cycle matroid of a graph given as an edge list; element i is edge i - 1"""
    if not edges:
        raise InvalidParameter("A graphic matroid needs at least one edge")
    oracle = graphic_rank_oracle(edges)
    P = from_rank_function(len(edges), lambda J: oracle([j - 1 for j in J]))
    # loops have rank 0 but still carry a unit cage entry
    return P.with_cage(tuple(1 for _ in edges))


def restriction_polymatroid(
    matroid_rank: MatroidRank,
    subsets: Sequence[Sequence[Hashable]],
    cage: Optional[Sequence[int]] = None,
) -> Polymatroid:
    """
    Polymatroid induced by a matroid and chosen ground-set subsets.

    rk(J) = rk_M(union of S_j for j in J); the cage defaults to
    (|S_1|, ..., |S_p|). The axioms are re-validated on the result, so a
    bad oracle surfaces as an AxiomViolation.
    """
    groups: List[FrozenSet[Hashable]] = [frozenset(S) for S in subsets]
    if not groups:
        raise InvalidParameter("At least one subset is required")
    if cage is None:
        cage = tuple(len(S) for S in groups)

    def rank_of(J: Tuple[int, ...]) -> int:
        union: FrozenSet[Hashable] = frozenset().union(*(groups[j - 1] for j in J))
        return matroid_rank(union)

    sizes = [len(S) for S in groups]
    logger.debug(f"Restricting matroid to {len(groups)} subsets of sizes {sizes}")
    return from_rank_function(len(groups), rank_of, cage=cage)


def direct_sum(P: Polymatroid, Q: Polymatroid) -> Polymatroid:
    """Concatenate ground sets; ranks add across the two blocks"""
    low = P.full_mask
    ranks = tuple(P.ranks[mask & low] + Q.ranks[mask >> P.p] for mask in range(1 << (P.p + Q.p)))
    table = {mask_to_subset(mask): ranks[mask] for mask in range(1, len(ranks))}
    return validate(P.p + Q.p, table, cage=P.cage + Q.cage)


def rank_zero(p: int, cage: Optional[Sequence[int]] = None) -> Polymatroid:
    """The degenerate polymatroid whose only base point is the origin"""
    return from_rank_function(p, lambda J: 0, cage=cage)

