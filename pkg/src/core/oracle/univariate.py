"""
Univariate Oracle
小さな有限体上の一変数多項式の試し割りによる完全分解
"""
import itertools
from typing import Iterator, List, Optional, Tuple

from core.errors import ArityMismatchError, DegenerateInputError, ScopeError
from core.finite_field import FieldSpec, enumerate_elements
from core.gcd import normalize
from core.polynomial import Polynomial, divide, total_degree
from utils.constants import ORACLE_BUDGET

Factorization = List[Tuple[Polynomial, int]]


def monic_polynomials(field: FieldSpec, degree: int) -> Iterator[Polynomial]:
    """
    次数 degree のモニック一変数多項式を正準順序で列挙

    下位の係数 (c_0, ..., c_{degree-1}) を体の元の列挙順の桁とみなし、c_0 が最速で動く。
    """
    elements = list(enumerate_elements(field))
    leading = {(degree,): field.one()}
    for digits in itertools.product(elements, repeat=degree):
        terms = dict(leading)
        for power, c in enumerate(reversed(digits)):
            if not c.is_zero:
                terms[(power,)] = c
        yield Polynomial._trusted(field, 1, terms)


def factor_univariate(f: Polynomial, budget: Optional[int] = None) -> Factorization:
    """
    一変数多項式を既約なモニック多項式の積に分解

    次数の小さい候補から順に試し割りする。すでに小さい因子を取り除いているので
    割り切る候補は必ず既約。

    Args:
        f: 零でない一変数多項式
        budget: 候補数の上限 (Q^⌊deg/2⌋ がこれを超えると ScopeError)

    Returns:
        (既約因子, 重複度) のリスト。次数の昇順、同じ次数では正準順序

    Raises:
        ScopeError: 予算を超える場合
    """
    if f.arity != 1:
        raise ArityMismatchError(f"一変数多項式ではありません (arity={f.arity})")
    if f.is_zero:
        raise DegenerateInputError("零多項式は分解できません")
    budget = ORACLE_BUDGET if budget is None else budget
    degree = total_degree(f)
    if degree >= 2 and f.field.order ** (degree // 2) > budget:
        raise ScopeError(
            f"{f.field} 上の {degree} 次式の試し割りは予算 {budget} を超えます"
        )

    g = normalize(f)
    factors: Factorization = []
    e = 1
    while total_degree(g) >= 2 * e:
        for candidate in monic_polynomials(f.field, e):
            multiplicity = 0
            while True:
                q, r = divide(g, candidate)
                if not r.is_zero:
                    break
                g = q
                multiplicity += 1
            if multiplicity:
                factors.append((candidate, multiplicity))
            if total_degree(g) < 2 * e:
                break
        e += 1
    if total_degree(g) >= 1:
        factors.append((g, 1))
    factors.sort(key=lambda item: total_degree(item[0]))
    return factors
