"""
Tests for Möbius functions, cave polynomials and Snapper polynomials.
"""

from fractions import Fraction
from itertools import permutations

import pytest

from src.cli.fixtures import load_fixture
from src.invariants import (
    binomial_coefficients,
    binomial_transform,
    cave,
    cave_from_mobius,
    cave_permuted,
    generalized_polymatroid_check,
    mobius,
    mobius_by_definition,
    mobius_support,
    snapper,
    snapper_box_failures,
    snapper_value,
)
from src.polycore import base_points, rank_from_points, translate_minus, truncate
from src.polyalg import SparsePoly, support
from src.utils.errors import DimensionMismatch, InvalidParameter, ZeroPolynomial
from src.utils.lattice_utils import dominates, subtract, unit_vector
from tests.conftest import EXAMPLE_DUAL_CAVE

U23_CAVE = {
    (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1,
    (1, 0, 0): -1, (0, 1, 0): -1, (0, 0, 1): -1,
    (0, 0, 0): 1,
}


# ===== Möbius =====

def test_mobius_of_u12(u12):
    table = mobius(u12)
    assert table.nonzero() == {(0, 0): -1, (0, 1): 1, (1, 0): 1}
    assert table[(1, 1)] == 0
    assert table.total() == 1


def test_mobius_is_one_on_base_points(example):
    table = mobius(example)
    assert all(table[n] == 1 for n in base_points(example))


def test_closed_form_matches_the_recursion(example, example_dual, u23):
    for P in (example, example_dual, u23):
        assert mobius(P) == mobius_by_definition(P)


def test_mobius_support_of_example_dual(example_dual):
    assert set(mobius_support(example_dual)) == set(EXAMPLE_DUAL_CAVE)


def test_degenerate_polymatroid(zero_rank):
    assert mobius(zero_rank).nonzero() == {(0, 0): 1}
    assert cave(zero_rank) == SparsePoly.constant(2, 1)
    assert snapper(zero_rank) == SparsePoly.constant(2, 1)


# ===== Cave =====

def test_cave_of_u12(u12):
    assert cave(u12).pretty() == "t1 + t2 - 1"


def test_cave_of_u23(u23):
    assert cave(u23) == SparsePoly(3, U23_CAVE)


def test_cave_of_example_dual(example_dual):
    f = cave(example_dual)
    assert f == SparsePoly(3, EXAMPLE_DUAL_CAVE)
    assert f.evaluate((1, 1, 1)) == 1


def test_cave_equals_mobius_generating_function(example, example_dual, u23):
    for P in (example, example_dual, u23):
        assert cave(P) == cave_from_mobius(P)


def test_cave_is_symmetric(example_dual):
    f = cave(example_dual)
    for pi in permutations((1, 2, 3)):
        assert cave_permuted(example_dual, pi) == f


def test_cave_permuted_rejects_non_permutations(example):
    with pytest.raises(InvalidParameter):
        cave_permuted(example, (1, 1, 2))
    with pytest.raises(InvalidParameter):
        cave_permuted(example, (1, 2))


def test_generalized_polymatroid_check(example, example_dual):
    assert generalized_polymatroid_check(cave(example))
    assert generalized_polymatroid_check(cave(example_dual))
    assert not generalized_polymatroid_check(SparsePoly(2, {(2, 0): 1, (0, 2): 1}))
    with pytest.raises(ZeroPolynomial):
        generalized_polymatroid_check(SparsePoly.zero(2))


# ===== Snapper =====

def test_binomial_coefficients():
    assert binomial_coefficients(0) == (Fraction(1),)
    assert binomial_coefficients(2) == (Fraction(1), Fraction(3, 2), Fraction(1, 2))


def test_snapper_of_u12_and_u23(u12, u23):
    assert snapper(u12).pretty() == "t1 + t2 + 1"
    expected = SparsePoly(3, {
        (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1,
        (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
        (0, 0, 0): 1,
    })
    assert snapper(u23) == expected


def test_snapper_of_example_dual(example_dual):
    f = snapper(example_dual)
    assert f.evaluate((0, 0, 0)) == 1
    assert f.evaluate((1, 1, 1)) == 18
    assert snapper_value(example_dual, (1, 1, 1)) == 18
    assert snapper_value(example_dual, (0, 0, 0)) == 1


def test_snapper_value_agrees_with_expansion(example):
    f = snapper(example)
    for v in [(0, 1, 2), (2, 0, 1), (3, 3, 3)]:
        assert snapper_value(example, v) == f.evaluate(v)


def test_binomial_transform_of_a_square():
    f = binomial_transform(SparsePoly.monomial((2,)))
    assert f == SparsePoly(1, {(2,): Fraction(1, 2), (1,): Fraction(3, 2), (0,): 1})


def test_snapper_is_integer_valued_despite_rational_coefficients(example, example_dual):
    for P in (example, example_dual, load_fixture("U(2;2,1)")):
        assert not snapper(P).has_nonnegative_integer_coefficients()
        assert snapper_box_failures(P) == []


def test_snapper_box_failures_rejects_negative_bound(u12):
    with pytest.raises(InvalidParameter):
        snapper_box_failures(u12, bound=-1)


def test_snapper_value_rejects_bad_points(example):
    with pytest.raises(DimensionMismatch):
        snapper_value(example, (1, 1))
    with pytest.raises(InvalidParameter):
        snapper_value(example, (1, -1, 0))


# ===== Truncation and translation =====

@pytest.mark.parametrize("i", [1, 2, 3])
def test_mobius_agrees_after_cutting(example, i):
    b = unit_vector(3, i)
    S = base_points(example)
    whole = mobius(example)
    top = mobius(rank_from_points(truncate(S, b)))
    shifted = mobius(rank_from_points(translate_minus(S, b)))
    for n, value in whole.items():
        if dominates(n, b):
            assert top[n] == value
            assert shifted[subtract(n, b)] == value


def test_cave_support_above_an_offset(example):
    b = (1, 0, 1)
    above = {n for n in support(cave(example)) if dominates(n, b)}
    shifted = rank_from_points(translate_minus(base_points(example), b))
    moved = {tuple(x + y for x, y in zip(n, b)) for n in support(cave(shifted))}
    assert above == moved
