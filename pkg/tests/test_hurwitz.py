from fractions import Fraction
from itertools import product
from math import factorial

import pytest

from pillowcase.hurwitz import (HurwitzQuery, cycle_type, hurwitz_brute_force,
                                hurwitz_number, parity_vanishes,
                                pillowcase_cover_series, profile_grid)
from pillowcase.stats import z_series


def test_examples():
    assert hurwitz_number(HurwitzQuery(2, ((2,), (2,)))) == Fraction(1, 2)
    assert hurwitz_number(HurwitzQuery(3, ((3,), (3,)))) == Fraction(1, 3)
    assert hurwitz_brute_force(HurwitzQuery(3, ((3,), (3,)))) == Fraction(1, 3)
    for d in range(1, 5):
        q = HurwitzQuery(d, ((1,) * d,))
        assert hurwitz_number(q) == hurwitz_brute_force(q) == Fraction(1, factorial(d))


def test_validation():
    with pytest.raises(ValueError):
        HurwitzQuery(3, ((2,),))
    with pytest.raises(ValueError):
        hurwitz_brute_force(HurwitzQuery(7, ((7,), (7,))))


def test_cycle_type():
    assert cycle_type((1, 2, 0, 3)) == (3, 1)


def test_oracle_grid():
    for d in range(1, 5):
        grid = profile_grid(d)
        for k in (2, 3):
            for profiles in product(grid, repeat=k):
                q = HurwitzQuery(d, profiles)
                h = hurwitz_number(q)
                assert h == hurwitz_brute_force(q)
                if parity_vanishes(q):
                    assert h == 0


def test_cover_series():
    s = pillowcase_cover_series((), (), 6)
    z = z_series(12)
    assert list(s.coeffs) == [z.coeffs[2 * d] for d in range(7)]
    assert pillowcase_cover_series((1, 1), (), 3).coeffs[1] == 0
    with pytest.raises(ValueError):
        pillowcase_cover_series((2,), (), 3)
