from fractions import Fraction

import pytest
from hypothesis import given

from conftest import partitions
from pillowcase.partitions import (EMPTY, MayaDiagram, Partition, TwoQuotient,
                                   balanced_partitions_of, contour, core_size,
                                   dimension, dimension_det, from_two_quotient,
                                   hook_lengths, is_balanced, maya,
                                   parse_partition, partition_count,
                                   partitions_of, sigma, two_quotient, unit_slopes)


def test_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    assert Partition([3, 1]).size == 4 and Partition([3, 1]).length == 2


def test_parse():
    assert parse_partition("5,4,4,2") == (5, 4, 4, 2)
    assert parse_partition("3^2,1^5") == (3, 3, 1, 1, 1, 1, 1)
    assert parse_partition("-") == EMPTY == parse_partition("")
    assert str(EMPTY) == "-"
    with pytest.raises(ValueError):
        parse_partition("1,3")
    assert Partition([2, 1]).to_json() == {"parts": [2, 1], "size": 3}


def test_counts():
    assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partition_count(30) == 5604
    assert all(len(partitions_of(n)) == partition_count(n) for n in range(16))
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))


def test_hooks_of_worked_example():
    assert hook_lengths((5, 4, 4, 2)) == [[8, 7, 5, 4, 1], [6, 5, 3, 2], [5, 4, 2, 1], [2, 1]]
    assert dimension((2, 2)) == 2 and dimension((3, 1)) == 3


def test_dimension_sum_of_squares():
    from math import factorial
    for n in range(9):
        assert sum(dimension(p) ** 2 for p in partitions_of(n)) == factorial(n)


@given(partitions())
def test_dimension_agrees_with_determinant(lam):
    assert dimension(lam) == dimension_det(lam)


@given(partitions())
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_two_quotient_worked_example():
    tq = two_quotient((5, 4, 4, 2))
    assert (tq.alpha, tq.beta, tq.core_size) == ((2, 2, 1), (2,), 1)
    assert core_size((5, 4, 4, 2)) == 1 and not is_balanced((5, 4, 4, 2))


def test_small_quotients():
    assert two_quotient((2,)) == TwoQuotient((), (1,), 0)
    assert two_quotient((1, 1)) == TwoQuotient((1,), (), 0)
    assert two_quotient((2, 1)).core_size == 2


@given(partitions(max_size=18))
def test_two_quotient_round_trip(lam):
    tq = two_quotient(lam)
    assert tq.size == lam.size
    assert from_two_quotient(tq) == lam


@given(partitions())
def test_transpose_swaps_quotients(lam):
    tq, tc = two_quotient(lam), two_quotient(lam.conjugate())
    if tq.core_size == 0:
        assert (tc.alpha, tc.beta) == (tq.beta.conjugate(), tq.alpha.conjugate())


def test_balanced_counts():
    # pairs of partitions (α, β) with |α| + |β| = n/2
    for n in range(0, 16, 2):
        half = n // 2
        expect = sum(partition_count(k) * partition_count(half - k) for k in range(half + 1))
        assert len(balanced_partitions_of(n)) == expect
    assert balanced_partitions_of(3) == ()
    assert all(is_balanced(p) for p in balanced_partitions_of(10))


def test_sigma_signs():
    assert sigma(()) == 1
    assert sigma((2,)) == 1 and sigma((1, 1)) == -1
    with pytest.raises(ValueError):
        sigma((2, 1))


def test_maya():
    m = maya((5, 4, 4, 2))
    assert m.particle_values() == [Fraction(9, 2), Fraction(5, 2), Fraction(3, 2)]
    assert m.hole_values() == [Fraction(-1, 2), Fraction(-5, 2), Fraction(-7, 2)]
    assert m.to_partition() == (5, 4, 4, 2)
    assert maya(()) == MayaDiagram(frozenset(), frozenset())
    with pytest.raises(ValueError):
        MayaDiagram(frozenset({1}), frozenset())


@given(partitions())
def test_maya_round_trip(lam):
    assert maya(lam).to_partition() == lam


@given(partitions())
def test_contour_area(lam):
    assert contour(lam).area() == 2 * lam.size
    assert contour(lam, Fraction(1, 3)).area() == Fraction(2 * lam.size, 9)


def test_contour_shape():
    c = contour((1,))
    assert [c(x) for x in (-2, -1, 0, 1, 2)] == [2, 1, 2, 1, 2]
    assert unit_slopes(()) == {} and unit_slopes((1,)) == {-1: 1, 0: -1}
