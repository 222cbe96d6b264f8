"""
数値半群のテスト
"""
import itertools
from functools import lru_cache

import pytest

from core.semigroup import GeneratorSet, gaps_below, span_membership


@lru_cache(maxsize=None)
def _representable(target, gens):
    if target == 0:
        return True
    return any(target >= g and _representable(target - g, gens) for g in gens)


def test_span_membership_examples():
    gens = GeneratorSet((3, 5))
    assert not span_membership(7, gens)
    assert span_membership(8, gens)
    assert span_membership(9, gens)
    assert span_membership(0, gens)


def test_gaps_below():
    assert gaps_below(8, GeneratorSet((3, 5))) == [1, 2, 4, 7]
    assert gaps_below(7, GeneratorSet((3, 5))) == [1, 2, 4]
    assert gaps_below(1, GeneratorSet((3, 5))) == []


def test_empty_generator_set():
    empty = GeneratorSet()
    assert span_membership(0, empty)
    assert not span_membership(1, empty)
    assert gaps_below(4, empty) == [1, 2, 3]


def test_generator_validation():
    with pytest.raises(ValueError):
        GeneratorSet((5, 3))
    with pytest.raises(ValueError):
        GeneratorSet((0, 3))
    assert GeneratorSet.of([5, 3, 3]).generators == (3, 5)
    assert str(GeneratorSet((3, 5))) == "{3,5}"


def test_negative_arguments():
    with pytest.raises(ValueError):
        span_membership(-1, GeneratorSet((2,)))
    with pytest.raises(ValueError):
        gaps_below(0, GeneratorSet((2,)))


def test_dynamic_programming_matches_brute_force():
    for size in range(1, 4):
        for gens in itertools.combinations(range(1, 13), size):
            expected_gaps = [t for t in range(1, 101) if not _representable(t, gens)]
            assert gaps_below(101, GeneratorSet(gens)) == expected_gaps
    for target in range(0, 101, 7):
        assert span_membership(target, GeneratorSet((4, 9))) == _representable(target, (4, 9))
