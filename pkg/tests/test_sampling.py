"""
乱択・全列挙のテスト
"""
import random

import pytest

from core.errors import ScopeError
from core.polynomial import total_degree
from core.sampling import iter_normalized_of_degree, iter_polynomials, random_element, random_polynomial


def test_iter_polynomials_counts(gf2, gf3):
    assert len(list(iter_polynomials(gf2, 2, 1))) == 7
    assert len(list(iter_polynomials(gf3, 1, 2))) == 26


def test_iter_polynomials_are_distinct_and_bounded(gf2):
    polys = list(iter_polynomials(gf2, 2, 2))
    assert len(polys) == 63
    assert len(set(polys)) == 63
    assert all(not f.is_zero and total_degree(f) <= 2 for f in polys)


def test_iter_polynomials_budget(gf5):
    with pytest.raises(ScopeError):
        list(iter_polynomials(gf5, 2, 3, budget=1000))


def test_normalized_counts(gf2):
    cubics = list(iter_normalized_of_degree(gf2, 1, 3))
    assert len(cubics) == 8
    assert all(total_degree(f) == 3 and f.leading_coefficient().is_one for f in cubics)
    assert len(list(iter_normalized_of_degree(gf2, 2, 2))) == 56


def test_random_polynomial_is_reproducible(gf5):
    first = [random_polynomial(random.Random(7), gf5, 2, 3) for _ in range(3)]
    second = [random_polynomial(random.Random(7), gf5, 2, 3) for _ in range(3)]
    assert first == second


def test_random_polynomial_exact_degree(gf2):
    rng = random.Random(0)
    for _ in range(50):
        assert total_degree(random_polynomial(rng, gf2, 2, 4)) == 4


def test_random_element_nonzero(gf4):
    rng = random.Random(1)
    assert all(not random_element(rng, gf4, nonzero=True).is_zero for _ in range(100))
