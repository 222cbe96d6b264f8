"""
Sampling
乱択・全列挙による多項式の生成 (sample / selftest / テストで使う)
"""
import itertools
import random
from typing import Iterator, Optional

from core.errors import ScopeError
from core.finite_field import FieldSpec, enumerate_elements
from core.polynomial import Polynomial, monomials_of_degree, monomials_up_to_degree
from utils.constants import ORACLE_BUDGET


def random_element(rng: random.Random, field: FieldSpec, nonzero: bool = False):
    """体の一様乱択 (nonzero なら零以外から)"""
    if nonzero:
        return field.from_index(rng.randrange(1, field.order))
    return field.from_index(rng.randrange(field.order))


def random_polynomial(rng: random.Random, field: FieldSpec, arity: int, degree: int,
                      exact: bool = True) -> Polynomial:
    """
    全次数 degree 以下の単項式の係数を一様に選んだ多項式

    Args:
        rng: 乱数生成器 (シード固定で再現できる)
        field: 係数体
        arity: 変数の個数
        degree: 全次数の上限
        exact: True なら次数 degree の成分が零でないものが出るまで引き直す

    Returns:
        乱択した多項式 (exact でなければ零もありうる)
    """
    top = monomials_of_degree(arity, degree)
    lower = monomials_up_to_degree(arity, degree - 1) if degree > 0 else []
    while True:
        terms = {}
        for m in top:
            c = random_element(rng, field)
            if not c.is_zero:
                terms[m] = c
        if exact and not terms:
            continue
        for m in lower:
            c = random_element(rng, field)
            if not c.is_zero:
                terms[m] = c
        return Polynomial._trusted(field, arity, terms)


def _check_count(field: FieldSpec, slots: int, budget: int):
    if field.order ** slots > budget:
        raise ScopeError(f"{field} 上の {slots} 係数の全列挙 ({field.order}^{slots} 件) は予算 {budget} を超えます")


def iter_polynomials(field: FieldSpec, arity: int, max_degree: int,
                     budget: Optional[int] = None) -> Iterator[Polynomial]:
    """
    全次数 max_degree 以下の零でない多項式を正準順序ですべて列挙

    係数列 (grevlex 降順の単項式ごと) を体の元の列挙順の桁とみなし、最後の単項式が最速で動く。

    Raises:
        ScopeError: 件数が予算を超える場合
    """
    monomials = monomials_up_to_degree(arity, max_degree)
    _check_count(field, len(monomials), ORACLE_BUDGET if budget is None else budget)
    elements = list(enumerate_elements(field))
    for digits in itertools.product(elements, repeat=len(monomials)):
        terms = {m: c for m, c in zip(monomials, digits) if not c.is_zero}
        if terms:
            yield Polynomial._trusted(field, arity, terms)


def iter_normalized_of_degree(field: FieldSpec, arity: int, degree: int,
                              budget: Optional[int] = None) -> Iterator[Polynomial]:
    """
    全次数がちょうど degree で grevlex の先頭係数が 1 の多項式をすべて列挙

    一変数ならモニック多項式の全列挙になる。

    Raises:
        ScopeError: 件数が予算を超える場合
    """
    top = monomials_of_degree(arity, degree)
    lower = monomials_up_to_degree(arity, degree - 1) if degree > 0 else []
    _check_count(field, len(top) - 1 + len(lower), ORACLE_BUDGET if budget is None else budget)
    elements = list(enumerate_elements(field))
    one = field.one()
    for i, lead in enumerate(top):
        free = top[i + 1:] + lower
        for digits in itertools.product(elements, repeat=len(free)):
            terms = {lead: one}
            terms.update((m, c) for m, c in zip(free, digits) if not c.is_zero)
            yield Polynomial._trusted(field, arity, terms)
