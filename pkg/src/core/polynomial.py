"""
Polynomial
有限体上の疎な多変数多項式と、次数ごとの斉次分解・次数ギャップ

項は指数ベクトル (Monomial) から非零の体の元への辞書で持つ。
正準的な項の順序は次数付き逆辞書式順序 (grevlex) の降順。
"""
import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from core.errors import (
    ArityMismatchError,
    DegenerateInputError,
    FieldMismatchError,
    InexactDivisionError,
)
from core.finite_field import FieldElement, FieldSpec, embed

Monomial = Tuple[int, ...]

# 指数は 32 ビットに収まること
MAX_EXPONENT = 2 ** 32 - 1


class _Unbounded:
    """比較だけができる無限大の印 (算術は定義しない)"""

    __slots__ = ('_sign', '_name')

    def __init__(self, sign: int, name: str):
        self._sign = sign
        self._name = name

    def _cmp(self, other) -> int:
        if other is self:
            return 0
        if isinstance(other, _Unbounded):
            return self._sign - other._sign
        if isinstance(other, (int, float)):
            return self._sign
        return NotImplemented

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash(self._name)

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __repr__(self):
        return self._name

    def __str__(self):
        return 'infinity' if self._sign > 0 else '-infinity'


INFINITY = _Unbounded(1, 'INFINITY')
NEG_INFINITY = _Unbounded(-1, 'NEG_INFINITY')

Degree = Union[int, _Unbounded]


def grevlex_key(monomial: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """grevlex の比較キー (大きいほど先頭)"""
    return sum(monomial), tuple(-e for e in reversed(monomial))


class Polynomial:
    """
    有限体上の多変数多項式 (不変)

    Attributes:
        field: 係数体
        arity: 変数の個数
    """

    __slots__ = ('field', 'arity', '_terms', '_hash')

    def __init__(self, field: FieldSpec, arity: int,
                 terms: Optional[Mapping[Monomial, FieldElement]] = None):
        if arity < 1:
            raise ArityMismatchError(f"変数の個数は 1 以上です: {arity}")
        self.field = field
        self.arity = arity
        clean: Dict[Monomial, FieldElement] = {}
        for monomial, coeff in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != arity:
                raise ArityMismatchError(f"指数ベクトル {monomial} の長さが変数の個数 {arity} と一致しません")
            if any(e < 0 or e > MAX_EXPONENT for e in monomial):
                raise ArityMismatchError(f"指数が範囲外です: {monomial}")
            if coeff.field != field:
                raise FieldMismatchError(f"係数 {coeff} が {field} の元ではありません")
            if not coeff.is_zero:
                clean[monomial] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, field: FieldSpec, arity: int, terms: Dict[Monomial, FieldElement]) -> 'Polynomial':
        # 検証済みの項 (零係数なし) から直接作る
        poly = cls.__new__(cls)
        poly.field = field
        poly.arity = arity
        poly._terms = terms
        poly._hash = None
        return poly

    # -- 構成 ---------------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec, arity: int) -> 'Polynomial':
        return cls._trusted(field, arity, {})

    @classmethod
    def constant(cls, field: FieldSpec, arity: int, value: Union[int, FieldElement]) -> 'Polynomial':
        c = field.element(value) if isinstance(value, int) else value
        return cls(field, arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, field: FieldSpec, arity: int, index: int) -> 'Polynomial':
        """変数 x_{index+1} (index は 0 始まり)"""
        if not 0 <= index < arity:
            raise ArityMismatchError(f"変数番号 {index} が範囲外です (arity={arity})")
        exponents = [0] * arity
        exponents[index] = 1
        return cls._trusted(field, arity, {tuple(exponents): field.one()})

    @classmethod
    def monomial(cls, field: FieldSpec, exponents: Sequence[int],
                 coeff: Union[int, FieldElement, None] = None) -> 'Polynomial':
        if coeff is None:
            coeff = field.one()
        elif isinstance(coeff, int):
            coeff = field.element(coeff)
        return cls(field, len(exponents), {tuple(exponents): coeff})

    # -- 参照 ---------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, FieldElement]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, FieldElement]]:
        """grevlex 降順で (指数, 係数) を返す"""
        for monomial in sorted(self._terms, key=grevlex_key, reverse=True):
            yield monomial, self._terms[monomial]

    def coefficient(self, monomial: Sequence[int]) -> FieldElement:
        return self._terms.get(tuple(monomial), self.field.zero())

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self) -> Tuple[Monomial, FieldElement]:
        """grevlex 最大の項"""
        if not self._terms:
            raise DegenerateInputError("零多項式には先頭項がありません")
        monomial = max(self._terms, key=grevlex_key)
        return monomial, self._terms[monomial]

    def leading_coefficient(self) -> FieldElement:
        return self.leading_term()[1]

    def variables_used(self) -> Tuple[int, ...]:
        """実際に現れる変数の番号 (0 始まり)"""
        return tuple(i for i in range(self.arity) if any(m[i] for m in self._terms))

    def degree_in(self, index: int) -> int:
        """変数 index に関する次数 (零多項式は -1)"""
        return max((m[index] for m in self._terms), default=-1)

    # -- 演算子 --------------------------------------------------------------

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, self.arity, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else poly_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else poly_sub(other, self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.arity == other.arity
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.arity, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        from core.polynomial_parser import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self}, {self.field}, arity={self.arity})"


@dataclass(frozen=True)
class GradedDecomposition:
    """
    斉次成分への分解 F = F_d + F_{d_1} + ... + F_{d_m} (d > d_1 > ... > d_m)
    """
    forms: Tuple[Tuple[int, Polynomial], ...]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.forms)

    @property
    def leading(self) -> Polynomial:
        return self.forms[0][1]

    @property
    def lowest(self) -> Polynomial:
        return self.forms[-1][1]

    def form(self, degree: int) -> Optional[Polynomial]:
        for d, f in self.forms:
            if d == degree:
                return f
        return None

    def __len__(self) -> int:
        return len(self.forms)


@dataclass(frozen=True)
class GapProfile:
    """次数 d と次数ギャップ列 γ_1 < ... < γ_m"""
    d: int
    gaps: Tuple[int, ...]
    tangent_cone_degree: int

    @property
    def m(self) -> int:
        return len(self.gaps)

    def gap(self, i: int) -> Degree:
        """
        i 番目 (1 始まり) のギャップ。形式が i 個未満なら INFINITY
        """
        if i < 1:
            raise ValueError(f"ギャップの番号は 1 以上です: {i}")
        return self.gaps[i - 1] if i <= len(self.gaps) else INFINITY


# ---------------------------------------------------------------------------
# 環演算
# ---------------------------------------------------------------------------

def check_compatible(f: Polynomial, g: Polynomial):
    if f.field != g.field:
        raise FieldMismatchError(f"異なる体の多項式です: {f.field} と {g.field}")
    if f.arity != g.arity:
        raise ArityMismatchError(f"変数の個数が一致しません: {f.arity} と {g.arity}")


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    check_compatible(f, g)
    terms = dict(f._terms)
    for m, c in g._terms.items():
        if m in terms:
            s = terms[m] + c
            if s.is_zero:
                del terms[m]
            else:
                terms[m] = s
        else:
            terms[m] = c
    return Polynomial._trusted(f.field, f.arity, terms)


def poly_neg(f: Polynomial) -> Polynomial:
    return Polynomial._trusted(f.field, f.arity, {m: -c for m, c in f._terms.items()})


def poly_sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_add(f, poly_neg(g))


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    check_compatible(f, g)
    terms: Dict[Monomial, FieldElement] = {}
    zero = f.field.zero()
    for m1, c1 in f._terms.items():
        for m2, c2 in g._terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            terms[m] = terms.get(m, zero) + c1 * c2
    return Polynomial._trusted(f.field, f.arity, {m: c for m, c in terms.items() if not c.is_zero})


def poly_pow(f: Polynomial, e: int) -> Polynomial:
    if e < 0:
        raise ValueError(f"指数は 0 以上です: {e}")
    result = Polynomial.constant(f.field, f.arity, 1)
    base = f
    while e:
        if e & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        e >>= 1
    return result


def scale(f: Polynomial, c: FieldElement) -> Polynomial:
    """定数倍"""
    if c.is_zero:
        return Polynomial.zero(f.field, f.arity)
    return Polynomial._trusted(f.field, f.arity, {m: v * c for m, v in f._terms.items()})


def monomial_multiply(f: Polynomial, monomial: Monomial, c: FieldElement) -> Polynomial:
    """単項式 c·X^monomial 倍"""
    if c.is_zero:
        return Polynomial.zero(f.field, f.arity)
    return Polynomial._trusted(
        f.field, f.arity,
        {tuple(a + b for a, b in zip(m, monomial)): v * c for m, v in f._terms.items()},
    )


# ---------------------------------------------------------------------------
# 次数と斉次分解
# ---------------------------------------------------------------------------

def total_degree(f: Polynomial) -> Degree:
    """全次数。零多項式は NEG_INFINITY"""
    if f.is_zero:
        return NEG_INFINITY
    return max(sum(m) for m in f._terms)


def homogeneous_component(f: Polynomial, degree: int) -> Polynomial:
    """次数 degree の斉次成分 (なければ零多項式)"""
    return Polynomial._trusted(
        f.field, f.arity, {m: c for m, c in f._terms.items() if sum(m) == degree}
    )


def graded_decomposition(f: Polynomial) -> GradedDecomposition:
    """
    次数の降順に並べた斉次成分の列

    Raises:
        DegenerateInputError: 零多項式の場合
    """
    if f.is_zero:
        raise DegenerateInputError("零多項式は斉次分解できません")
    buckets: Dict[int, Dict[Monomial, FieldElement]] = {}
    for m, c in f._terms.items():
        buckets.setdefault(sum(m), {})[m] = c
    forms = tuple(
        (d, Polynomial._trusted(f.field, f.arity, buckets[d]))
        for d in sorted(buckets, reverse=True)
    )
    return GradedDecomposition(forms)


def leading_form(f: Polynomial) -> Polynomial:
    """最高次の斉次成分 F_d"""
    return graded_decomposition(f).leading


def tangent_cone(f: Polynomial) -> Polynomial:
    """最低次の斉次成分 (接錐)"""
    return graded_decomposition(f).lowest


def _require_nonconstant(f: Polynomial):
    if f.is_zero:
        raise DegenerateInputError("零多項式には次数ギャップがありません")
    if f.is_constant:
        raise DegenerateInputError("定数多項式には次数ギャップがありません")


def degree_gap(f: Polynomial) -> Degree:
    """
    次数ギャップ γ(F) = d - d_1。斉次 (単項式を含む) なら INFINITY

    Raises:
        DegenerateInputError: 零または定数の場合
    """
    _require_nonconstant(f)
    degrees = graded_decomposition(f).degrees
    if len(degrees) == 1:
        return INFINITY
    return degrees[0] - degrees[1]


def gap_profile(f: Polynomial) -> GapProfile:
    """
    ギャップ列 γ_i = d - d_i

    Raises:
        DegenerateInputError: 零または定数の場合
    """
    _require_nonconstant(f)
    degrees = graded_decomposition(f).degrees
    d = degrees[0]
    return GapProfile(d=d, gaps=tuple(d - di for di in degrees[1:]), tangent_cone_degree=degrees[-1])


# ---------------------------------------------------------------------------
# 微分・代入・持ち上げ
# ---------------------------------------------------------------------------

def _check_index(f: Polynomial, index: int):
    if not isinstance(index, int) or not 0 <= index < f.arity:
        raise ArityMismatchError(f"変数番号 {index} が範囲外です (arity={f.arity})")


def partial_derivative(f: Polynomial, index: int) -> Polynomial:
    """変数 index に関する形式的偏微分 (指数 ≡ 0 mod p の項は消える)"""
    _check_index(f, index)
    terms = {}
    for m, c in f._terms.items():
        e = m[index]
        if e % f.field.p == 0:
            continue
        new_m = m[:index] + (e - 1,) + m[index + 1:]
        terms[new_m] = c * e
    return Polynomial._trusted(f.field, f.arity, terms)


def evaluate(f: Polynomial, point: Sequence[FieldElement]) -> FieldElement:
    """点 point での値"""
    if len(point) != f.arity:
        raise ArityMismatchError(f"点の次元 {len(point)} が変数の個数 {f.arity} と一致しません")
    for v in point:
        if v.field != f.field:
            raise FieldMismatchError(f"{v} は {f.field} の元ではありません")
    total = f.field.zero()
    for m, c in f._terms.items():
        term = c
        for v, e in zip(point, m):
            if e:
                term = term * (v ** e)
        total = total + term
    return total


def substitute_variable(f: Polynomial, index: int,
                        value: Union[int, FieldElement, Polynomial]) -> Polynomial:
    """
    変数 index に値または多項式を代入 (変数の個数は変えない)

    Args:
        f: 対象の多項式
        index: 変数番号 (0 始まり)
        value: 体の元、整数、または同じ体・同じ変数の個数の多項式

    Returns:
        代入後の多項式
    """
    _check_index(f, index)
    if isinstance(value, int):
        value = f.field.element(value)
    if isinstance(value, FieldElement):
        if value.field != f.field:
            raise FieldMismatchError(f"{value} は {f.field} の元ではありません")
        value = Polynomial.constant(f.field, f.arity, value)
    check_compatible(f, value)

    result = Polynomial.zero(f.field, f.arity)
    powers: Dict[int, Polynomial] = {}
    for m, c in f._terms.items():
        e = m[index]
        if e not in powers:
            powers[e] = poly_pow(value, e)
        rest = m[:index] + (0,) + m[index + 1:]
        result = poly_add(result, monomial_multiply(powers[e], rest, c))
    return result


def dehomogenize(form: Polynomial, index: int) -> Polynomial:
    """変数 index に 1 を代入する (二元形式を一変数化するときに使う)"""
    return substitute_variable(form, index, 1)


def lift_to_extension(f: Polynomial, target: FieldSpec) -> Polynomial:
    """係数を拡大体 target へ埋め込む"""
    if f.field == target:
        return f
    return Polynomial._trusted(target, f.arity, {m: embed(c, target) for m, c in f._terms.items()})


def change_arity(f: Polynomial, arity: int, mapping: Sequence[int]) -> Polynomial:
    """
    変数を付け替える (mapping[i] は元の変数 i の新しい番号)
    """
    terms = {}
    for m, c in f._terms.items():
        new_m = [0] * arity
        for i, e in enumerate(m):
            if e:
                new_m[mapping[i]] += e
        terms[tuple(new_m)] = c
    return Polynomial._trusted(f.field, arity, terms)


def coefficients_in(f: Polynomial, index: int) -> Dict[int, Polynomial]:
    """
    変数 index の多項式とみたときの係数 (残りの変数の多項式)
    """
    _check_index(f, index)
    buckets: Dict[int, Dict[Monomial, FieldElement]] = {}
    for m, c in f._terms.items():
        rest = m[:index] + (0,) + m[index + 1:]
        buckets.setdefault(m[index], {})[rest] = c
    return {e: Polynomial._trusted(f.field, f.arity, t) for e, t in buckets.items()}


# ---------------------------------------------------------------------------
# 除算
# ---------------------------------------------------------------------------

def divide(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """
    grevlex 順の割り算 f = q·g + r (除数は1つ)

    g が f を割り切るときは必ず r = 0 になる。

    Raises:
        DegenerateInputError: g が零多項式の場合
    """
    check_compatible(f, g)
    if g.is_zero:
        raise DegenerateInputError("零多項式で割ることはできません")
    lead_m, lead_c = g.leading_term()
    lead_inv = lead_c ** -1
    zero = f.field.zero()

    rest = dict(f._terms)
    quotient: Dict[Monomial, FieldElement] = {}
    remainder: Dict[Monomial, FieldElement] = {}
    while rest:
        m = max(rest, key=grevlex_key)
        c = rest[m]
        if all(a >= b for a, b in zip(m, lead_m)):
            shift = tuple(a - b for a, b in zip(m, lead_m))
            factor = c * lead_inv
            quotient[shift] = factor
            for gm, gc in g._terms.items():
                tm = tuple(a + b for a, b in zip(gm, shift))
                v = rest.get(tm, zero) - gc * factor
                if v.is_zero:
                    rest.pop(tm, None)
                else:
                    rest[tm] = v
        else:
            remainder[m] = c
            del rest[m]
    return (Polynomial._trusted(f.field, f.arity, quotient),
            Polynomial._trusted(f.field, f.arity, remainder))


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    割り切れる前提の除算

    Raises:
        InexactDivisionError: 余りが出た場合
    """
    q, r = divide(f, g)
    if not r.is_zero:
        raise InexactDivisionError("割り切れません")
    return q


def divides(g: Polynomial, f: Polynomial) -> bool:
    return divide(f, g)[1].is_zero


# ---------------------------------------------------------------------------
# 単項式の列挙
# ---------------------------------------------------------------------------

def monomials_of_degree(arity: int, degree: int) -> List[Monomial]:
    """全次数 degree の単項式すべて (grevlex 降順)"""
    result = [
        tuple(parts)
        for parts in _compositions(degree, arity)
    ]
    result.sort(key=grevlex_key, reverse=True)
    return result


def _compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_up_to_degree(arity: int, degree: int) -> List[Monomial]:
    """全次数 degree 以下の単項式 (grevlex 降順)"""
    return list(itertools.chain.from_iterable(
        monomials_of_degree(arity, d) for d in range(degree, -1, -1)
    ))
