"""
Tests for monomial ideals, upper Koszul complexes, Betti tables,
K-polynomials and homological shift ideals.
"""

import pytest

from src.polycore import base_points
from src.polyalg import SparsePoly
from src.syzygy import (
    BettiTable,
    MonomialIdeal,
    betti_table,
    hs_from_betti,
    hs_ideal,
    is_linear,
    k_polynomial_from_betti,
    k_polynomial_from_cave,
    lcm_lattice_degrees,
    minimalize,
    polymatroidal_ideal,
    reduced_homology_ranks,
    upper_koszul_faces,
)
from src.utils.errors import DimensionMismatch, EmptyIdeal, InvalidParameter, NegativeExponent
from tests.conftest import EXAMPLE_BASE_POINTS, EXAMPLE_KPOLY


# ===== Ideals =====

def test_minimalize_drops_multiples():
    assert minimalize([(1, 1), (1, 0), (2, 0), (0, 2)]) == ((0, 2), (1, 0))


def test_ideal_membership():
    I = MonomialIdeal.of(2, [(1, 0), (0, 2)])
    assert I.contains((3, 0))
    assert I.contains((0, 2))
    assert not I.contains((0, 1))
    with pytest.raises(DimensionMismatch):
        I.contains((1, 1, 1))


def test_ideal_validation():
    with pytest.raises(NegativeExponent):
        MonomialIdeal.of(2, [(-1, 1)])
    with pytest.raises(DimensionMismatch):
        MonomialIdeal.of(2, [(1, 1, 1)])


def test_ideal_text_export():
    I = MonomialIdeal.of(3, [(2, 0, 3), (0, 1, 0)])
    assert I.to_text() == "x2\nx1^2*x3^3"
    assert MonomialIdeal.of(2, [(0, 0)]).to_text() == "1"


def test_example_ideal(example):
    I = polymatroidal_ideal(example)
    assert list(I.gens) == EXAMPLE_BASE_POINTS
    assert I.degrees() == (5,)
    assert I.point_set() == base_points(example)


# ===== Koszul complexes =====

def test_upper_koszul_faces_of_u12(u12):
    I = polymatroidal_ideal(u12)
    assert upper_koszul_faces(I, (1, 1)) == [(), (0,), (1,)]
    assert upper_koszul_faces(I, (0, 0)) == []


def test_reduced_homology():
    assert reduced_homology_ranks([]) == {}
    assert reduced_homology_ranks([()]) == {-1: 1}
    # two points
    assert reduced_homology_ranks([(), (0,), (1,)]) == {0: 1}
    # a full simplex is acyclic
    assert reduced_homology_ranks([(), (0,), (1,), (0, 1)]) == {}
    # boundary of a triangle
    circle = [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    assert reduced_homology_ranks(circle) == {1: 1}


# ===== Betti tables =====

def test_betti_table_of_u12(u12):
    table = betti_table(polymatroidal_ideal(u12))
    assert dict(table.items()) == {(0, (0, 1)): 1, (0, (1, 0)): 1, (1, (1, 1)): 1}
    assert table.projective_dimension() == 1
    assert table.alternating_sum() == 1


def test_betti_table_of_example(example):
    table = betti_table(polymatroidal_ideal(example))
    assert table[(1, (2, 2, 2))] == 2
    assert [table.total(i) for i in table.indices()] == [8, 10, 3]
    assert is_linear(table, 5)
    assert table.alternating_sum() == 1


def test_betti_table_is_independent_of_worker_count(example):
    ideal = polymatroidal_ideal(example)
    assert betti_table(ideal, parallel=2) == betti_table(ideal, parallel=1)


def test_betti_table_errors():
    with pytest.raises(EmptyIdeal):
        betti_table(MonomialIdeal.of(2, []))
    with pytest.raises(InvalidParameter):
        betti_table(MonomialIdeal.of(2, [(1, 0)]), parallel=0)


def test_lcm_lattice_of_u12(u12):
    assert lcm_lattice_degrees(polymatroidal_ideal(u12)) == [(0, 1), (1, 0), (1, 1)]


def test_rank_zero_ideal_is_the_unit_ideal(zero_rank):
    table = betti_table(polymatroidal_ideal(zero_rank))
    assert dict(table.items()) == {(0, (0, 0)): 1}


# ===== K-polynomials =====

def test_example_kpolynomial_by_both_routes(example):
    expected = SparsePoly(3, EXAMPLE_KPOLY)
    assert len(expected) == 17
    assert k_polynomial_from_cave(example) == expected
    table = betti_table(polymatroidal_ideal(example))
    assert k_polynomial_from_betti(table) == expected


def test_kpolynomial_does_not_depend_on_the_cage(example):
    assert k_polynomial_from_cave(example, (3, 3, 5)) == k_polynomial_from_cave(example)


def test_kpolynomial_of_u12(u12):
    assert k_polynomial_from_cave(u12) == SparsePoly(2, {(1, 0): 1, (0, 1): 1, (1, 1): -1})


def test_kpolynomial_from_a_handmade_table():
    table = BettiTable(2, {(0, (1, 0)): 1, (0, (0, 1)): 1, (1, (1, 1)): 1})
    assert k_polynomial_from_betti(table).pretty() == "-t1*t2 + t1 + t2"


# ===== Homological shift ideals =====

def test_hs_ideals_of_example(example):
    table = betti_table(polymatroidal_ideal(example))
    assert hs_ideal(example, i=0) == polymatroidal_ideal(example)

    hs1 = hs_ideal(example, i=1)
    assert len(hs1) == 6
    assert hs1.degrees() == (6,)
    assert hs1 == hs_from_betti(table, 1)

    hs2 = hs_ideal(example, i=2)
    assert list(hs2.gens) == [(1, 2, 4), (2, 1, 4), (2, 2, 3)]
    assert hs2 == hs_from_betti(table, 2)


def test_hs_beyond_projective_dimension_is_zero(example):
    assert hs_ideal(example, i=3).is_empty()


def test_hs_rejects_negative_index(example):
    with pytest.raises(InvalidParameter):
        hs_ideal(example, i=-1)
    with pytest.raises(InvalidParameter):
        hs_from_betti(BettiTable(1, {}), -1)
