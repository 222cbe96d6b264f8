"""
Bivariate Oracle
小さな有限体上の二変数多項式の約数探索と完全分解

f = P·Q (deg P = e <= deg Q = t) と分解できるとき、次数ごとに
  F_{d-j} = Σ_{i=0}^{j} P_{e-i}·Q_{t-j+i}
が成り立つ。P_e は F_d の約数なので F_d の分解から候補を作り、
j = 1, 2, ... の順に P_{e-j} を全通り試して Q_{t-j} が割り切れるものだけを残す。
候補の列挙は網羅的で、割り切れる約数があれば必ず見つかる。
"""
import itertools
from typing import Dict, List, Optional

from core.errors import DegenerateInputError, ScopeError
from core.finite_field import FieldElement, enumerate_elements
from core.gcd import normalize
from core.oracle.univariate import Factorization, factor_univariate
from core.polynomial import (
    Polynomial,
    change_arity,
    divide,
    graded_decomposition,
    monomials_of_degree,
    poly_mul,
    poly_pow,
    poly_sub,
    total_degree,
)
from utils.constants import ORACLE_BUDGET
from utils.logger import get_logger

logger = get_logger(__name__)


def _homogenize(g: Polynomial) -> Polynomial:
    """一変数 g(x) を次数 deg g の二元形式 y^{deg g}·g(x/y) にする"""
    s = total_degree(g)
    return Polynomial._trusted(g.field, 2, {(m[0], s - m[0]): c for m, c in g.terms.items()})


def binary_form_divisors(form: Polynomial, degree: int,
                         budget: Optional[int] = None) -> List[Polynomial]:
    """
    二元形式の次数 degree の約数 (先頭係数 1 に正規化) をすべて返す

    form = c·y^b·Π H_i^{m_i} (H_i は G(x, 1) の既約因子を斉次化したもの) から組み立てる。
    """
    b = min(m[1] for m in form.terms)
    rest = Polynomial._trusted(form.field, 2, {(m[0], m[1] - b): c for m, c in form.terms.items()})
    g = change_arity(Polynomial._trusted(form.field, 2, {(m[0], 0): c for m, c in rest.terms.items()}),
                     1, [0, 0])
    pieces = [(_homogenize(h), mult) for h, mult in factor_univariate(g, budget)]

    y = Polynomial.variable(form.field, 2, 1)
    one = Polynomial.constant(form.field, 2, 1)
    divisors: List[Polynomial] = []
    seen = set()
    ranges = [range(mult + 1) for _, mult in pieces]
    for b_power in range(min(b, degree) + 1):
        for exponents in itertools.product(*ranges):
            deg = b_power + sum(k * total_degree(h) for (h, _), k in zip(pieces, exponents))
            if deg != degree:
                continue
            divisor = poly_pow(y, b_power) if b_power else one
            for (h, _), k in zip(pieces, exponents):
                if k:
                    divisor = poly_mul(divisor, poly_pow(h, k))
            divisor = normalize(divisor)
            if divisor not in seen:
                seen.add(divisor)
                divisors.append(divisor)
    return divisors


def _forms_of_degree(field_elements: List[FieldElement], degree: int) -> List[Dict]:
    # 次数 degree の二元形式の項の辞書をすべて (零を含む)
    monomials = monomials_of_degree(2, degree)
    result = []
    for coeffs in itertools.product(field_elements, repeat=len(monomials)):
        result.append({m: c for m, c in zip(monomials, coeffs) if not c.is_zero})
    return result


class _DivisorSearch:
    """次数 e の約数を段ごとに探す深さ優先探索"""

    def __init__(self, f: Polynomial, budget: int):
        self.f = f
        self.field = f.field
        self.d = total_degree(f)
        self.components = {deg: form for deg, form in graded_decomposition(f).forms}
        self.zero = Polynomial.zero(f.field, 2)
        self.elements = None
        self.budget = budget
        self.visited = 0
        self._form_cache: Dict[int, List[Polynomial]] = {}

    def component(self, degree: int) -> Polynomial:
        return self.components.get(degree, self.zero)

    def forms_of_degree(self, degree: int) -> List[Polynomial]:
        if degree not in self._form_cache:
            size = self.field.order ** (degree + 1)
            if size > self.budget:
                raise ScopeError(f"{self.field} 上の {degree} 次形式の候補数 {size} が予算 {self.budget} を超えます")
            if self.elements is None:
                self.elements = list(enumerate_elements(self.field))
            self._form_cache[degree] = [
                Polynomial._trusted(self.field, 2, terms)
                for terms in _forms_of_degree(self.elements, degree)
            ]
        return self._form_cache[degree]

    def search(self, e: int, leading: Polynomial) -> Optional[Polynomial]:
        t = self.d - e
        q_top, r = divide(self.component(self.d), leading)
        if not r.is_zero:
            return None
        p_parts = {e: leading}
        q_parts = {t: q_top}
        if self._level(1, e, t, p_parts, q_parts):
            return normalize(_sum_parts(self.f, p_parts))
        return None

    def _level(self, j: int, e: int, t: int,
               p_parts: Dict[int, Polynomial], q_parts: Dict[int, Polynomial]) -> bool:
        if j > self.d:
            return True
        # F_{d-j} から P_e·Q_{t-j} と P_{e-j}·Q_t 以外の項を引く
        residual = self.component(self.d - j)
        for i in range(1, j):
            p = p_parts.get(e - i)
            q = q_parts.get(t - j + i)
            if p is not None and q is not None and not p.is_zero and not q.is_zero:
                residual = poly_sub(residual, poly_mul(p, q))

        leading = p_parts[e]
        q_top = q_parts[t]
        candidates = self.forms_of_degree(e - j) if j <= e else [self.zero]
        for candidate in candidates:
            self.visited += 1
            if self.visited > self.budget:
                raise ScopeError(f"約数探索の候補数が予算 {self.budget} を超えました")
            rest = poly_sub(residual, poly_mul(candidate, q_top)) if not candidate.is_zero else residual
            if t - j >= 0:
                quotient, remainder = divide(rest, leading)
                if not remainder.is_zero:
                    continue
                q_parts[t - j] = quotient
            elif not rest.is_zero:
                continue
            if j <= e:
                p_parts[e - j] = candidate
            if self._level(j + 1, e, t, p_parts, q_parts):
                return True
        p_parts.pop(e - j, None)
        q_parts.pop(t - j, None)
        return False


def _sum_parts(f: Polynomial, parts: Dict[int, Polynomial]) -> Polynomial:
    terms = {}
    for form in parts.values():
        terms.update(form.terms)
    return Polynomial(f.field, f.arity, terms)


def _check_bivariate(f: Polynomial):
    if f.arity != 2:
        raise ScopeError(f"二変数多項式だけが対象です (arity={f.arity})")
    if f.is_zero:
        raise DegenerateInputError("零多項式は分解できません")


def find_divisor(f: Polynomial, budget: Optional[int] = None, min_degree: int = 1) -> Optional[Polynomial]:
    """
    次数が最小の真の約数 (先頭係数 1) を探す

    Args:
        f: 二変数多項式
        budget: 候補数の上限
        min_degree: これより小さい次数の約数はないと分かっているときの開始次数

    Returns:
        見つかった約数 (既約)、なければ None

    Raises:
        ScopeError: 予算を超える場合、または二変数でない場合
    """
    _check_bivariate(f)
    budget = ORACLE_BUDGET if budget is None else budget
    d = total_degree(f)
    search = _DivisorSearch(f, budget)
    leading_form = search.component(d)
    for e in range(max(min_degree, 1), d // 2 + 1):
        for leading in binary_form_divisors(leading_form, e, budget):
            divisor = search.search(e, leading)
            if divisor is not None:
                logger.debug("%s の %d 次の約数 %s (候補 %d 件)", f, e, divisor, search.visited)
                return divisor
    return None


def is_irreducible_bivariate(f: Polynomial, budget: Optional[int] = None) -> bool:
    """
    基礎体上で既約か

    Raises:
        DegenerateInputError: 定数の場合
    """
    _check_bivariate(f)
    if f.is_constant:
        raise DegenerateInputError("定数は既約性を判定できません")
    return find_divisor(f, budget) is None


def factor_bivariate(f: Polynomial, budget: Optional[int] = None) -> Factorization:
    """
    基礎体上の完全分解 (約数探索の繰り返し)

    Returns:
        (既約因子, 重複度) のリスト (単数倍を除いて f に等しい)
    """
    _check_bivariate(f)
    factors: Factorization = []
    g = f
    min_degree = 1
    while total_degree(g) >= 1:
        divisor = find_divisor(g, budget, min_degree)
        if divisor is None:
            factors.append((normalize(g), 1))
            break
        multiplicity = 0
        while True:
            q, r = divide(g, divisor)
            if not r.is_zero:
                break
            g = q
            multiplicity += 1
        factors.append((divisor, multiplicity))
        min_degree = total_degree(divisor)
    return factors
