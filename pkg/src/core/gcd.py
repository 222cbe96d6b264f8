"""
GCD
一変数・多変数の最大公約式と無平方判定

多変数 GCD は原始的剰余列 (primitive PRS) による再帰。
主変数は最大次数が最小の変数 (同点なら番号の小さい方)。
"""
from dataclasses import dataclass
from typing import Optional, Sequence

from core.errors import ArityMismatchError, DegenerateInputError, NotAPthPowerError
from core.polynomial import (
    Polynomial,
    change_arity,
    check_compatible,
    coefficients_in,
    dehomogenize,
    divide,
    exact_divide,
    monomial_multiply,
    partial_derivative,
    poly_mul,
    poly_sub,
    scale,
    total_degree,
)


@dataclass(frozen=True)
class SquarefreeReport:
    """
    無平方判定の結果

    Attributes:
        squarefree: 無平方なら True
        obstruction: 無平方でないときの証拠 (f と偏微分の共通因子、または f = h^p の h)
    """
    squarefree: bool
    obstruction: Optional[Polynomial] = None


def normalize(f: Polynomial) -> Polynomial:
    """grevlex の先頭係数を 1 にする (零多項式はそのまま)"""
    if f.is_zero:
        return f
    lead = f.leading_coefficient()
    return f if lead.is_one else scale(f, lead ** -1)


def _one(f: Polynomial) -> Polynomial:
    return Polynomial.constant(f.field, f.arity, 1)


def _euclid(a: Polynomial, b: Polynomial) -> Polynomial:
    # 1 変数しか現れない場合のユークリッド互除法
    while not b.is_zero:
        a, b = b, divide(a, b)[1]
    return normalize(a)


def gcd_univariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    一変数多項式のモニックな GCD。gcd(0, 0) = 0

    Raises:
        ArityMismatchError: 一変数でない場合
    """
    if a.arity != 1 or b.arity != 1:
        raise ArityMismatchError(f"一変数多項式ではありません (arity {a.arity}, {b.arity})")
    check_compatible(a, b)
    return _euclid(a, b)


def _content(f: Polynomial, index: int) -> Polynomial:
    if f.is_zero:
        return f
    return gcd_many(list(coefficients_in(f, index).values()))


def _primitive_part(f: Polynomial, index: int) -> Polynomial:
    if f.is_zero:
        return f
    return exact_divide(f, _content(f, index))


def _check_multivariate(f: Polynomial, index: int):
    if f.arity < 2:
        raise ArityMismatchError(f"content は 2 変数以上で定義されます (arity={f.arity})")
    if not isinstance(index, int) or not 0 <= index < f.arity:
        raise ArityMismatchError(f"変数番号 {index} が範囲外です (arity={f.arity})")


def content(f: Polynomial, index: int) -> Polynomial:
    """
    変数 index の多項式とみたときの係数の GCD

    Args:
        f: 2 変数以上の多項式
        index: 主変数の番号 (0 始まり)

    Returns:
        正規化された content (f = 0 なら 0)
    """
    _check_multivariate(f, index)
    return _content(f, index)


def primitive_part(f: Polynomial, index: int) -> Polynomial:
    """f = content(f, index) · primitive_part(f, index)"""
    _check_multivariate(f, index)
    return _primitive_part(f, index)


def _pseudo_remainder(a: Polynomial, b: Polynomial, index: int) -> Polynomial:
    # lc(b)·R - lc(R)·x^k·b を主変数の次数が下がるまで繰り返す
    deg_b = b.degree_in(index)
    lc_b = coefficients_in(b, index)[deg_b]
    r = a
    while not r.is_zero and r.degree_in(index) >= deg_b:
        deg_r = r.degree_in(index)
        lc_r = coefficients_in(r, index)[deg_r]
        shift = tuple(deg_r - deg_b if i == index else 0 for i in range(a.arity))
        r = poly_sub(poly_mul(lc_b, r),
                     monomial_multiply(poly_mul(lc_r, b), shift, a.field.one()))
    return r


def _main_variable(a: Polynomial, b: Polynomial) -> int:
    used = sorted(set(a.variables_used()) | set(b.variables_used()))
    return min(used, key=lambda i: (max(a.degree_in(i), b.degree_in(i)), i))


def gcd_multivariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    多変数 GCD (先頭係数 1 に正規化)

    content の GCD と原始部分の PRS の結果の積を返す。
    """
    check_compatible(a, b)
    if a.is_zero:
        return normalize(b)
    if b.is_zero:
        return normalize(a)
    if a.is_constant or b.is_constant:
        return _one(a)

    used = set(a.variables_used()) | set(b.variables_used())
    if len(used) == 1:
        return _euclid(a, b)

    x = _main_variable(a, b)
    content_a, content_b = _content(a, x), _content(b, x)
    common_content = gcd_multivariate(content_a, content_b)
    pa, pb = exact_divide(a, content_a), exact_divide(b, content_b)

    if pa.degree_in(x) < pb.degree_in(x):
        pa, pb = pb, pa
    while True:
        if pb.degree_in(x) == 0:
            # 主変数を含まない原始的多項式は定数
            g = _one(a)
            break
        r = _pseudo_remainder(pa, pb, x)
        if r.is_zero:
            g = _primitive_part(pb, x)
            break
        pa, pb = pb, _primitive_part(r, x)

    return normalize(poly_mul(common_content, g))


def gcd_many(polys: Sequence[Polynomial]) -> Polynomial:
    """
    多項式のリストの GCD (途中で定数になれば打ち切り)

    Raises:
        DegenerateInputError: 空のリストの場合
    """
    if not polys:
        raise DegenerateInputError("空のリストの GCD は定義されません")
    g = normalize(polys[0])
    for f in polys[1:]:
        if not g.is_zero and g.is_constant:
            return g
        g = gcd_multivariate(g, f)
    return g


def pth_power_root(f: Polynomial) -> Polynomial:
    """
    f = h^p となる h (指数を p で割り、係数 c を c^{p^{n-1}} に置き換える)

    Raises:
        NotAPthPowerError: 割り切れない指数がある場合
    """
    p = f.field.p
    terms = {}
    for m, c in f.items():
        if any(e % p for e in m):
            raise NotAPthPowerError(f"指数 {m} が {p} で割り切れません")
        terms[tuple(e // p for e in m)] = c ** (p ** (f.field.n - 1))
    return Polynomial(f.field, f.arity, terms)


def is_squarefree(f: Polynomial) -> SquarefreeReport:
    """
    無平方判定

    gcd(f, ∂f/∂X_1, ..., ∂f/∂X_n) が定数なら無平方。
    偏微分がすべて 0 なら f は p 乗なので無平方ではない。

    Raises:
        DegenerateInputError: 零多項式の場合
    """
    if f.is_zero:
        raise DegenerateInputError("零多項式の無平方判定はできません")
    if total_degree(f) == 0:
        return SquarefreeReport(True)

    partials = [d for d in (partial_derivative(f, i) for i in range(f.arity)) if not d.is_zero]
    if not partials:
        return SquarefreeReport(False, pth_power_root(f))

    g = gcd_many([f] + partials)
    if g.is_constant:
        return SquarefreeReport(True)
    return SquarefreeReport(False, g)


def is_squarefree_binary_form(form: Polynomial) -> bool:
    """
    二元形式 y^a·G(x, y) (y ∤ G) の無平方判定

    a <= 1 かつ一変数多項式 G(x, 1) が無平方であることと同値。
    """
    if form.arity != 2:
        raise ArityMismatchError(f"二元形式ではありません (arity={form.arity})")
    if form.is_zero:
        raise DegenerateInputError("零多項式の無平方判定はできません")
    if not form.is_homogeneous:
        raise DegenerateInputError("斉次式ではありません")

    a = min(m[1] for m in form.terms)
    if a > 1:
        return False
    reduced = Polynomial(form.field, 2, {(m[0], m[1] - a): c for m, c in form.items()})
    g = change_arity(dehomogenize(reduced, 1), 1, [0, 0])
    if total_degree(g) == 0:
        return True
    derivative = partial_derivative(g, 0)
    if derivative.is_zero:
        return False
    return gcd_univariate(g, derivative).is_constant

