"""Polymatroid data model and lattice-point operations"""

from .point_set import PointSet, down_closure, is_mconvex, translate_minus, truncate
from .polymatroid import (
    Polymatroid,
    base_points,
    contains_base,
    contains_independent,
    dominates_base,
    dual,
    dual_points,
    from_rank_function,
    independence_points,
    is_matroid,
    rank_from_points,
    validate,
)
from .builders import (
    direct_sum,
    graphic,
    graphic_rank_oracle,
    rank_zero,
    restriction_polymatroid,
    uniform,
)

__all__ = [
    "PointSet",
    "Polymatroid",
    "base_points",
    "contains_base",
    "contains_independent",
    "direct_sum",
    "dominates_base",
    "down_closure",
    "dual",
    "dual_points",
    "from_rank_function",
    "graphic",
    "graphic_rank_oracle",
    "independence_points",
    "is_matroid",
    "is_mconvex",
    "rank_from_points",
    "rank_zero",
    "restriction_polymatroid",
    "translate_minus",
    "truncate",
    "uniform",
]
