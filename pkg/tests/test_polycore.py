"""
Tests for rank-table validation, lattice points, duality and constructors.
"""

import pytest

from src.cli.fixtures import K3_EDGES
from src.polycore import (
    PointSet,
    base_points,
    contains_base,
    contains_independent,
    direct_sum,
    dominates_base,
    down_closure,
    dual,
    dual_points,
    graphic,
    graphic_rank_oracle,
    independence_points,
    is_matroid,
    is_mconvex,
    rank_from_points,
    rank_zero,
    restriction_polymatroid,
    translate_minus,
    truncate,
    uniform,
    validate,
)
from src.utils.errors import (
    AxiomViolation,
    CageTooSmall,
    InvalidParameter,
    MalformedInput,
    MissingSubset,
    NotMConvex,
)
from src.utils.lattice_utils import unit_vector
from tests.conftest import EXAMPLE_BASE_POINTS, EXAMPLE_DUAL_POINTS


# ===== Validation =====

def test_example_validates(example):
    assert example.p == 3
    assert example.cage == (2, 2, 4)
    assert example.total_rank == 5
    assert example.rank((1, 3)) == 5
    assert example.rank(0b011) == 4
    assert example.rank(()) == 0


def test_cage_defaults_to_singleton_ranks():
    P = validate(2, {(1,): 1, (2,): 2, (1, 2): 2})
    assert P.cage == (1, 2)


@pytest.mark.parametrize(
    "table, axiom",
    [
        ({(1,): -1, (2,): 1, (1, 2): 1}, "normalization"),
        ({(1,): 2, (2,): 1, (1, 2): 1}, "monotonicity"),
        ({(1,): 1, (2,): 1, (1, 2): 3}, "submodularity"),
    ],
)
def test_axiom_violations(table, axiom):
    with pytest.raises(AxiomViolation) as excinfo:
        validate(2, table)
    assert excinfo.value.axiom == axiom
    assert excinfo.value.exit_code == 1


def test_submodularity_witness_names_both_subsets():
    with pytest.raises(AxiomViolation) as excinfo:
        validate(2, {(1,): 1, (2,): 1, (1, 2): 3})
    assert excinfo.value.witness == {"J1": [1], "J2": [2]}


def test_incomplete_table_is_malformed():
    with pytest.raises(MissingSubset) as excinfo:
        validate(2, {(1,): 1})
    assert isinstance(excinfo.value, MalformedInput)
    assert excinfo.value.exit_code == 2
    assert excinfo.value.witness == [[1, 2], [2]]


def test_cage_too_small(example):
    with pytest.raises(CageTooSmall):
        validate(3, example.rank_table(), cage=(1, 2, 4))
    with pytest.raises(CageTooSmall):
        example.with_cage((2, 2, 3))


def test_ground_set_guard():
    with pytest.raises(InvalidParameter):
        validate(17, {})


# ===== Lattice points =====

def test_example_base_points(example):
    assert list(base_points(example)) == EXAMPLE_BASE_POINTS


def test_independence_points_are_down_closure(example, u23):
    for P in (example, u23):
        assert independence_points(P) == down_closure(base_points(P))


def test_membership_queries(example):
    assert contains_independent(example, (0, 0, 0))
    assert contains_independent(example, (1, 1, 1))
    assert not contains_independent(example, (3, 0, 0))
    assert not contains_independent(example, (-1, 0, 0))
    assert contains_base(example, (0, 2, 3))
    assert not contains_base(example, (1, 1, 1))


def test_dominates_base(example):
    assert dominates_base(example, (2, 2, 4)) == 1
    assert dominates_base(example, (1, 1, 3)) == 1
    assert dominates_base(example, (0, 0, 4)) == 0
    assert dominates_base(example, (1, 1, 2)) == 0


def test_rank_zero_has_only_the_origin(zero_rank):
    assert list(base_points(zero_rank)) == [(0, 0)]
    assert list(independence_points(zero_rank)) == [(0, 0)]


# ===== M-convexity, truncation, translation =====

def test_is_mconvex():
    assert is_mconvex(PointSet.of(2, [(1, 0), (0, 1)]))
    assert not is_mconvex(PointSet.of(2, [(2, 0), (0, 2)]))
    assert not is_mconvex(PointSet.of(2, [(1, 0), (1, 1)]))
    assert not is_mconvex(PointSet.of(2, []))


def test_truncate_and_translate(example, u12):
    S = base_points(u12)
    assert list(truncate(S, (1, 0))) == [(1, 0)]
    assert translate_minus(S, (0, 0)) == S

    shifted = translate_minus(base_points(example), unit_vector(3, 3))
    assert len(shifted) == 8
    assert sorted(shifted) == sorted((a, b, c - 1) for a, b, c in EXAMPLE_BASE_POINTS)


def test_truncations_stay_mconvex(example):
    S = base_points(example)
    for i in range(1, 4):
        b = unit_vector(3, i)
        assert is_mconvex(truncate(S, b))
        assert is_mconvex(translate_minus(S, b))


def test_empty_truncation_is_legal(u12):
    assert truncate(base_points(u12), (1, 1)).is_empty()


def test_rank_from_points_recovers_the_polymatroid(example):
    assert rank_from_points(base_points(example)) == example


def test_rank_from_points_rejects_non_mconvex_sets():
    with pytest.raises(NotMConvex):
        rank_from_points(PointSet.of(2, [(2, 0), (0, 2)]))


# ===== Duality =====

def test_dual_points_of_example(example, example_dual):
    assert list(base_points(example_dual)) == EXAMPLE_DUAL_POINTS
    assert base_points(example_dual) == dual_points(example)


def test_dual_is_an_involution(example):
    assert dual(dual(example)) == example
    assert dual(dual(example, (3, 3, 5)), (3, 3, 5)) == example.with_cage((3, 3, 5))


def test_u12_is_self_dual(u12):
    assert dual(u12) == u12


# ===== Constructors =====

def test_uniform():
    P = uniform(3, (1, 1, 1), 2)
    assert P.rank((1,)) == 1
    assert P.rank((1, 2)) == 2
    assert P.total_rank == 2
    assert is_matroid(P)
    with pytest.raises(InvalidParameter):
        uniform(2, (1, 1), 3)


def test_graphic_triangle_is_u23(u23):
    assert graphic(K3_EDGES) == u23


def test_graphic_rank_oracle_counts_forest_edges():
    rank_of = graphic_rank_oracle(K3_EDGES)
    assert rank_of([]) == 0
    assert rank_of([0, 1]) == 2
    assert rank_of([0, 1, 2]) == 2


def test_restriction_polymatroid_of_triangle():
    oracle = graphic_rank_oracle(K3_EDGES)
    P = restriction_polymatroid(lambda edges: oracle(sorted(edges)), [[0], [1, 2]])
    assert P.rank_table() == {(1,): 1, (2,): 2, (1, 2): 2}
    assert P.cage == (1, 2)


def test_restriction_with_bad_oracle_is_rejected():
    with pytest.raises(AxiomViolation):
        restriction_polymatroid(lambda edges: 2 - len(edges), [[0], [1]])


def test_direct_sum(u12):
    P = direct_sum(u12, u12)
    assert P.p == 4
    assert P.cage == (1, 1, 1, 1)
    assert list(base_points(P)) == [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0)]


def test_rank_zero_builder():
    P = rank_zero(3, (1, 1, 1))
    assert P.total_rank == 0
    assert P.cage == (1, 1, 1)
    assert not is_matroid(rank_zero(2, (2, 1)))
