"""Indicator relations from hyperplane splits and valuativity checks"""

from .relations import (
    Relation,
    RelationCheck,
    Split,
    SplitCase,
    ValuativeVerdict,
    candidate_splits,
    check_relation,
    hilbert_valuative_check,
    hyperplane_split,
    mobius_valuative_check,
    random_splits,
    split_relation,
    valuative_check,
)

__all__ = [
    "Relation",
    "RelationCheck",
    "Split",
    "SplitCase",
    "ValuativeVerdict",
    "candidate_splits",
    "check_relation",
    "hilbert_valuative_check",
    "hyperplane_split",
    "mobius_valuative_check",
    "random_splits",
    "split_relation",
    "valuative_check",
]
