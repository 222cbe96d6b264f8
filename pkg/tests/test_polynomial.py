"""
多変数多項式のテスト
"""
import random

import pytest

from core.errors import ArityMismatchError, DegenerateInputError, FieldMismatchError, InexactDivisionError
from core.finite_field import field_build
from core.gcd import gcd_many, is_squarefree
from core.polynomial import (
    INFINITY,
    NEG_INFINITY,
    Polynomial,
    change_arity,
    degree_gap,
    divide,
    evaluate,
    exact_divide,
    gap_profile,
    graded_decomposition,
    grevlex_key,
    homogeneous_component,
    leading_form,
    lift_to_extension,
    monomials_of_degree,
    partial_derivative,
    substitute_variable,
    tangent_cone,
    total_degree,
)
from core.sampling import random_element, random_polynomial
from core.semigroup import GeneratorSet, gaps_below, span_membership
from utils.constants import DEFAULT_SEED

DOUBLE_GAP = "x^10 + xy^9 + x^7 + y^5 + x"


def test_graded_decomposition(gf2, poly):
    f = poly(DOUBLE_GAP, gf2)
    decomposition = graded_decomposition(f)
    assert decomposition.degrees == (10, 7, 5, 1)
    assert decomposition.leading == poly("x^10 + xy^9", gf2)
    assert decomposition.form(5) == poly("y^5", gf2, 2)
    assert decomposition.form(6) is None
    assert tangent_cone(f) == poly("x", gf2, 2)


def test_gap_profile(gf2, poly):
    profile = gap_profile(poly(DOUBLE_GAP, gf2))
    assert profile.d == 10
    assert profile.gaps == (3, 5, 9)
    assert profile.m == 3
    assert profile.gap(2) == 5
    assert profile.gap(4) == INFINITY
    assert profile.tangent_cone_degree == 1


def test_degree_gap(gf3, poly):
    assert degree_gap(poly("x^3 + x", gf3)) == 2
    assert degree_gap(poly("x^2 + y^2", gf3)) == INFINITY
    assert degree_gap(poly("x^2y", gf3)) == INFINITY
    assert INFINITY > 10 ** 9
    assert 10 ** 9 < INFINITY


def test_degree_gap_of_constants(gf3):
    with pytest.raises(DegenerateInputError):
        degree_gap(Polynomial.constant(gf3, 2, 1))
    with pytest.raises(DegenerateInputError):
        gap_profile(Polynomial.zero(gf3, 2))


def test_total_degree(gf2, poly):
    assert total_degree(poly(DOUBLE_GAP, gf2)) == 10
    assert total_degree(Polynomial.zero(gf2, 2)) == NEG_INFINITY
    assert total_degree(Polynomial.constant(gf2, 2, 1)) == 0


def test_product(gf2, poly):
    f = poly("x + y", gf2) * poly("x + y + 1", gf2)
    assert f == poly("x^2 + y^2 + x + y", gf2)


def test_arithmetic_identities(gf3, poly):
    f = poly("x^2 + 2xy + 1", gf3)
    assert f - f == Polynomial.zero(gf3, 2)
    assert f + 0 == f
    assert 2 * f == f + f
    assert f ** 3 == f * f * f


def test_incompatible_operands(gf3, gf5, poly):
    with pytest.raises(FieldMismatchError):
        poly("x", gf3) + poly("x", gf5)
    with pytest.raises(ArityMismatchError):
        poly("x", gf3, 1) + poly("x", gf3, 2)
    with pytest.raises(ArityMismatchError):
        Polynomial(gf3, 2, {(1,): gf3.one()})


def test_partial_derivative_in_characteristic_two(gf2, poly):
    f = poly("x^2 + xy", gf2)
    assert partial_derivative(f, 0) == poly("y", gf2, 2)
    assert partial_derivative(f, 1) == poly("x", gf2, 2)
    assert partial_derivative(poly("x^2 + y^2", gf2), 0).is_zero


def test_evaluate(gf3, poly):
    f = poly("x^2 + y", gf3)
    assert evaluate(f, [gf3.one(), gf3.one()]) == gf3.element(2)
    with pytest.raises(ArityMismatchError):
        evaluate(f, [gf3.one()])


def test_substitute_variable(gf3, poly):
    f = poly("x^2 + y", gf3)
    g = substitute_variable(f, 0, poly("y + 1", gf3, 2))
    assert g == poly("y^2 + 2y + 1 + y", gf3)


def test_divide(gf2, poly):
    f = poly("x^2 + y^2 + x + y", gf2)
    q, r = divide(f, poly("x + y", gf2))
    assert q == poly("x + y + 1", gf2)
    assert r.is_zero


def test_divide_with_remainder(gf3, poly):
    q, r = divide(poly("x^2 + 1", gf3), poly("x", gf3))
    assert q == poly("x", gf3)
    assert r == poly("1", gf3, 1)
    with pytest.raises(InexactDivisionError):
        exact_divide(poly("x^2 + 1", gf3), poly("x", gf3))
    with pytest.raises(DegenerateInputError):
        divide(poly("x", gf3), Polynomial.zero(gf3, 1))


def test_homogeneous_component(gf2, poly):
    f = poly(DOUBLE_GAP, gf2)
    assert homogeneous_component(f, 7) == poly("x^7", gf2, 2)
    assert homogeneous_component(f, 3).is_zero


def test_lift_keeps_coefficients(gf2, gf4, poly):
    f = poly("x^2 + xy + 1", gf2)
    lifted = lift_to_extension(f, gf4)
    assert lifted.field == gf4
    assert str(lifted) == str(f)


def test_change_arity(gf2, poly):
    f = poly("x^2 + x", gf2)
    assert change_arity(f, 2, [1]) == poly("y^2 + y", gf2)


def test_monomials_of_degree_grevlex():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials_of_degree(3, 2)) == 6


def test_leading_and_lowest_forms_are_multiplicative():
    rng = random.Random(7)
    gf3 = field_build(3)
    for _ in range(100):
        p = random_polynomial(rng, gf3, 2, rng.randint(1, 3))
        q = random_polynomial(rng, gf3, 2, rng.randint(1, 3))
        f = p * q
        assert leading_form(f) == leading_form(p) * leading_form(q)
        assert tangent_cone(f) == tangent_cone(p) * tangent_cone(q)


def _products(field, count, seed):
    rng = random.Random(seed)
    made = 0
    while made < count:
        p = random_polynomial(rng, field, 2, rng.randint(1, 3))
        q = random_polynomial(rng, field, 2, rng.randint(1, 3))
        f = p * q
        if is_squarefree(leading_form(f)).squarefree:
            made += 1
            yield p, q, f


@pytest.mark.parametrize('p', [2, 3])
def test_degree_gap_is_inherited_by_factors(p):
    """F = P·Q で F_d が無平方なら γ(P), γ(Q) >= γ(F)"""
    for left, right, f in _products(field_build(p), 500, seed=p):
        assert degree_gap(left) >= degree_gap(f)
        assert degree_gap(right) >= degree_gap(f)


@pytest.mark.parametrize('p', [2, 3])
def test_first_gap_component_identity(p):
    """γ = min(γ(P), γ(Q)) が有限なら F_{d-γ} = P_s·Q_{t-γ} + P_{s-γ}·Q_t"""
    for left, right, f in _products(field_build(p), 100, seed=10 + p):
        gamma = min(degree_gap(left), degree_gap(right))
        if gamma == INFINITY:
            continue
        s, t = total_degree(left), total_degree(right)
        expected = (homogeneous_component(left, s) * homogeneous_component(right, t - gamma)
                    + homogeneous_component(left, s - gamma) * homogeneous_component(right, t))
        assert homogeneous_component(f, s + t - gamma) == expected


# 因子 P, Q の零でない成分の位置 (先頭からの次数差)
_OFFSET_PATTERNS = [
    ((0, 1), (0, 2)),
    ((0, 2), (0, 3)),
    ((0, 2, 3), (0, 5)),
    ((0, 3), (0, 4, 5)),
    ((0, 3), (0, 5)),
    ((0, 4), (0, 5, 6, 7)),
    ((0, 1, 3), (0, 2)),
]


def _random_form(rng, field, degree):
    while True:
        terms = {m: random_element(rng, field) for m in monomials_of_degree(2, degree)}
        form = Polynomial(field, 2, terms)
        if not form.is_zero:
            return form


def _sparse_factor(rng, field, offsets):
    top = max(offsets) + rng.randint(0, 1)
    result = Polynomial.zero(field, 2)
    for offset in offsets:
        result = result + _random_form(rng, field, top - offset)
    return result


def _sparse_products(count, seed):
    """F_d が無平方で全成分の GCD が 1 になる積 F = P·Q"""
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        field = field_build(rng.choice([2, 3]))
        left_offsets, right_offsets = rng.choice(_OFFSET_PATTERNS)
        left = _sparse_factor(rng, field, left_offsets)
        right = _sparse_factor(rng, field, right_offsets)
        f = left * right
        forms = [form for _, form in graded_decomposition(f).forms]
        if len(forms) < 2 or not is_squarefree(forms[0]).squarefree:
            continue
        if not gcd_many(forms).is_constant:
            continue
        cases.append((left, right, f))
    return cases


@pytest.fixture(scope='module')
def sparse_products():
    return _sparse_products(500, DEFAULT_SEED)


def _cross_terms(left, right, k):
    # P_s·Q_{t-k} + P_{s-k}·Q_t (負の次数の成分は零)
    s, t = total_degree(left), total_degree(right)
    return (homogeneous_component(left, s) * homogeneous_component(right, t - k)
            + homogeneous_component(left, s - k) * homogeneous_component(right, t))


@pytest.mark.parametrize('i', [1, 2, 3, 4])
def test_component_identity_at_gaps_outside_earlier_span(sparse_products, i):
    """γ_i ∉ span{γ_1..γ_{i-1}} なら F_{d-γ_i} = P_s·Q_{t-γ_i} + P_{s-γ_i}·Q_t"""
    checked = 0
    for left, right, f in sparse_products:
        profile = gap_profile(f)
        if profile.m < i:
            continue
        gamma = profile.gap(i)
        if span_membership(gamma, GeneratorSet(profile.gaps[:i - 1])):
            continue
        assert homogeneous_component(f, profile.d - gamma) == _cross_terms(left, right, gamma), str(f)
        checked += 1
    assert checked > 0


def test_component_identity_below_last_gap(sparse_products):
    """0 < k < γ_m かつ k ∉ span{γ_1..γ_{m-1}} なら F_{d-k} = P_s·Q_{t-k} + P_{s-k}·Q_t"""
    checked = 0
    for left, right, f in sparse_products:
        profile = gap_profile(f)
        for k in gaps_below(profile.gaps[-1], GeneratorSet(profile.gaps[:-1])):
            assert homogeneous_component(f, profile.d - k) == _cross_terms(left, right, k), f"{f} k={k}"
            checked += 1
    assert checked > 0


def _check_reconstruction(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        field = field_build(*rng.choice([(2, 1), (3, 1), (2, 2), (5, 1)]))
        f = random_polynomial(rng, field, rng.randint(1, 3), rng.randint(0, 4))
        decomposition = graded_decomposition(f)
        total = Polynomial.zero(field, f.arity)
        for degree, form in decomposition.forms:
            assert form == homogeneous_component(f, degree)
            assert not form.is_zero
            total = total + form
        assert total == f
        assert list(decomposition.degrees) == sorted(set(decomposition.degrees), reverse=True)


def test_graded_decomposition_reconstructs():
    _check_reconstruction(500, DEFAULT_SEED)


@pytest.mark.slow
def test_graded_decomposition_reconstructs_full():
    _check_reconstruction(10000, DEFAULT_SEED + 1)


def _random_monomial(rng, arity):
    return tuple(rng.randint(0, 4) for _ in range(arity))


def test_grevlex_is_a_monomial_order():
    rng = random.Random(DEFAULT_SEED)
    for _ in range(5000):
        arity = rng.randint(1, 4)
        a, b, c = (_random_monomial(rng, arity) for _ in range(3))
        ka, kb, kc = grevlex_key(a), grevlex_key(b), grevlex_key(c)
        # 反対称
        if ka <= kb and kb <= ka:
            assert a == b
        # 推移
        if ka < kb and kb < kc:
            assert ka < kc
        # 単項式の積と両立
        if ka < kb:
            shifted_a = tuple(x + y for x, y in zip(a, c))
            shifted_b = tuple(x + y for x, y in zip(b, c))
            assert grevlex_key(shifted_a) < grevlex_key(shifted_b)
        # 全次数が先
        if sum(a) < sum(b):
            assert ka < kb
