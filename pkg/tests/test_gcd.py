"""
GCD と無平方判定のテスト
"""
import itertools
import random

import pytest

from core.errors import ArityMismatchError, DegenerateInputError, NotAPthPowerError
from core.finite_field import enumerate_elements, field_build
from core.gcd import (
    content,
    gcd_many,
    gcd_multivariate,
    gcd_univariate,
    is_squarefree,
    is_squarefree_binary_form,
    normalize,
    primitive_part,
    pth_power_root,
)
from core.oracle import factor_bivariate
from core.polynomial import Polynomial, divides, monomials_of_degree, poly_pow
from core.sampling import random_polynomial
from utils.constants import DEFAULT_SEED


def test_gcd_univariate(gf5, poly):
    g = gcd_univariate(poly("x^2 - 1", gf5), poly("x^2 + 2x + 1", gf5))
    assert g == poly("x + 1", gf5)


def test_gcd_multivariate_common_factor(gf3, poly):
    common = poly("x + y", gf3)
    a = common * poly("x + 1", gf3, 2)
    b = common * poly("y + 1", gf3)
    assert gcd_multivariate(a, b) == common


def test_gcd_multivariate_coprime(gf2, poly):
    g = gcd_multivariate(poly("x^2 + xy + y^2", gf2), poly("x + 1", gf2, 2))
    assert g == Polynomial.constant(gf2, 2, 1)


def test_gcd_is_normalized(gf5, poly):
    g = gcd_multivariate(poly("3x^2 + 3xy", gf5), poly("2x", gf5, 2))
    assert g == poly("x", gf5, 2)


def test_gcd_with_zero(gf3, poly):
    f = poly("2x + y", gf3)
    assert gcd_multivariate(Polynomial.zero(gf3, 2), f) == normalize(f)
    assert gcd_multivariate(Polynomial.zero(gf3, 2), Polynomial.zero(gf3, 2)).is_zero


def test_gcd_three_variables(gf2, poly):
    common = poly("xy + z", gf2)
    a = common * poly("x + z + 1", gf2)
    b = common * poly("y^2 + z", gf2)
    assert gcd_multivariate(a, b) == common


def test_gcd_many(gf2, poly):
    polys = [poly("x^2 + xy", gf2), poly("x^2", gf2, 2), poly("xy^3", gf2)]
    assert gcd_many(polys) == poly("x", gf2, 2)
    with pytest.raises(DegenerateInputError):
        gcd_many([])


def test_content_and_primitive_part(gf3, poly):
    f = poly("xy + x", gf3)
    assert content(f, 1) == poly("x", gf3, 2)
    assert primitive_part(f, 1) == poly("y + 1", gf3)
    with pytest.raises(ArityMismatchError):
        content(poly("x^2", gf3), 0)


def test_squarefree(gf2, gf3, poly):
    assert is_squarefree(poly("x^2 + xy + y^2", gf2)).squarefree
    assert not is_squarefree((poly("x + y", gf3) ** 2) * poly("x + 1", gf3, 2)).squarefree


def test_pth_power_obstruction(gf2, poly):
    report = is_squarefree(poly("x^2 + y^2", gf2))
    assert not report.squarefree
    assert report.obstruction == poly("x + y", gf2)


def test_pth_power_root(gf3, gf4, poly):
    f = poly("x^3 + 1", gf3)
    root = pth_power_root(f)
    assert root == poly("x + 1", gf3)
    assert poly_pow(root, 3) == f

    g = poly("a*x^2", gf4)
    assert poly_pow(pth_power_root(g), 2) == g
    with pytest.raises(NotAPthPowerError):
        pth_power_root(poly("x^2 + x", gf4))


def test_squarefree_of_zero(gf2):
    with pytest.raises(DegenerateInputError):
        is_squarefree(Polynomial.zero(gf2, 2))


def _binary_forms(field, degree):
    monomials = monomials_of_degree(2, degree)
    elements = list(enumerate_elements(field))
    for coeffs in itertools.product(elements, repeat=len(monomials)):
        terms = {m: c for m, c in zip(monomials, coeffs) if not c.is_zero}
        if terms:
            yield Polynomial(field, 2, terms)


@pytest.mark.parametrize('p, n', [(2, 1), (3, 1), (2, 2)])
def test_binary_form_shortcut_agrees(p, n):
    field = field_build(p, n)
    for degree in range(1, 4):
        for form in _binary_forms(field, degree):
            assert is_squarefree_binary_form(form) == is_squarefree(form).squarefree, str(form)


def test_binary_form_shortcut_rejects_non_forms(gf2, poly):
    with pytest.raises(DegenerateInputError):
        is_squarefree_binary_form(poly("x^2 + y", gf2))
    with pytest.raises(ArityMismatchError):
        is_squarefree_binary_form(poly("x^2", gf2, 3))


def _random_pairs(count: int, seed: int, fields, max_arity: int):
    """共通因子を仕込んだ組と、ただの乱択の組を交互に作る"""
    rng = random.Random(seed)
    for i in range(count):
        field = field_build(*rng.choice(fields))
        arity = rng.randint(1, max_arity)
        if i % 2 == 0:
            common = random_polynomial(rng, field, arity, rng.randint(1, 2))
            a = common * random_polynomial(rng, field, arity, rng.randint(0, 2))
            b = common * random_polynomial(rng, field, arity, rng.randint(0, 2))
        else:
            a = random_polynomial(rng, field, arity, rng.randint(1, 3))
            b = random_polynomial(rng, field, arity, rng.randint(1, 3))
        yield a, b


def _check_gcd_divides(count: int, seed: int):
    for a, b in _random_pairs(count, seed, [(2, 1), (3, 1), (2, 2)], 3):
        g = gcd_multivariate(a, b)
        assert divides(g, a), f"{g} ∤ {a}"
        assert divides(g, b), f"{g} ∤ {b}"
        assert g == normalize(g)
        assert gcd_multivariate(b, a) == g


def test_gcd_divides_both_inputs():
    _check_gcd_divides(300, DEFAULT_SEED)


@pytest.mark.slow
def test_gcd_divides_both_inputs_full():
    _check_gcd_divides(10000, DEFAULT_SEED + 1)


def _gcd_from_factors(a: Polynomial, b: Polynomial) -> Polynomial:
    """既約分解の共通部分 (重複度は小さいほう) の積"""
    result = Polynomial.constant(a.field, a.arity, 1)
    factors_b = [(normalize(q), m) for q, m in factor_bivariate(b)]
    for q, m in factor_bivariate(a):
        q = normalize(q)
        for other, n in factors_b:
            if other == q:
                result = result * poly_pow(q, min(m, n))
    return normalize(result)


def _check_gcd_against_factorization(count: int, seed: int):
    for a, b in _random_pairs(count, seed, [(2, 1), (3, 1)], 2):
        if a.arity != 2:
            continue
        assert gcd_multivariate(a, b) == _gcd_from_factors(a, b), f"gcd({a}, {b})"


def test_gcd_agrees_with_factorization():
    _check_gcd_against_factorization(120, DEFAULT_SEED + 2)


@pytest.mark.slow
def test_gcd_agrees_with_factorization_full():
    _check_gcd_against_factorization(2000, DEFAULT_SEED + 3)
