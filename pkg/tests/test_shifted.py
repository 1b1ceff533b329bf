from fractions import Fraction
from math import prod

import pytest
from hypothesis import given

from conftest import partitions
from pillowcase.characters import skew_dimension
from pillowcase.partitions import dimension, hook_multiset, partitions_of
from pillowcase.shifted import (bernoulli, determinant, falling_factorial,
                                p_bar_constant, p_bar_k, p_constant, p_k,
                                shifted_schur, zeta_negative)


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


def test_determinant():
    assert determinant([[2, 1], [1, 3]]) == 5
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([[Fraction(1, 2), 1], [1, 4]]) == 1
    assert determinant([]) == 1


def test_shifted_schur_basics():
    assert shifted_schur((), (3, 1)) == 1
    assert shifted_schur((1,), (3, 1)) == 4
    assert shifted_schur((2,), (1, 1)) == 0          # μ ⊄ λ
    assert shifted_schur((2, 1), (2, 1)) == 3         # hook product


@given(partitions(max_size=8))
def test_vanishing_and_hook_product(lam):
    assert shifted_schur(lam, lam) == prod(hook_multiset(lam))


def test_okounkov_olshanski():
    for n in range(0, 8):
        for lam in partitions_of(n):
            for k in range(0, min(n, 3) + 1):
                for mu in partitions_of(k):
                    lhs = shifted_schur(mu, lam) / falling_factorial(n, k)
                    assert lhs == Fraction(skew_dimension(lam, mu), dimension(lam))


def test_extra_variables_do_not_matter():
    assert shifted_schur((2, 1), (4, 2, 1)) == shifted_schur((2, 1), (4, 2, 1), n=6)


def test_constants():
    assert [bernoulli(n) for n in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert zeta_negative(1) == Fraction(-1, 12)
    assert zeta_negative(3) == Fraction(1, 120)
    assert p_constant(1) == Fraction(-1, 24)
    assert [p_bar_constant(k) for k in range(5)] == [Fraction(1, 2), 0, Fraction(-1, 8), 0, Fraction(5, 32)]


def test_power_sums():
    assert p_k((), 1) == Fraction(-1, 24)
    assert p_k((3, 1), 1) == 4 - Fraction(1, 24)
    # p_2 is the content sum times 2
    for lam in partitions_of(6):
        content = sum(j - i for i, row in enumerate(lam) for j in range(row))
        assert p_k(lam, 2) == 2 * content
    assert p_bar_k((), 1) == 0
    assert p_bar_k((1,), 1) == 0
    assert p_bar_k((2,), 1) == 2
    with pytest.raises(ValueError):
        p_k((1,), 0)


@given(partitions())
def test_transpose_symmetry(lam):
    conj = lam.conjugate()
    assert p_k(conj, 1) == p_k(lam, 1)
    assert p_k(conj, 2) == -p_k(lam, 2)
