"""
Finite Field
素体 GF(p) と拡大体 GF(p^n) の厳密な演算

元は法多項式による剰余表現 (低次の係数から並べた長さ n のタプル)。
拡大体の法多項式は「低次係数から比較した辞書順で最小のモニック既約多項式」を
使うので、同じ (p, n) からは常に同じ体が作られる。
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from core.errors import (
    EmbeddingError,
    FieldDivisionByZeroError,
    FieldMismatchError,
    InvalidFieldError,
    ScopeError,
)
from utils.constants import ENUMERATION_BUDGET, GENERATOR_SYMBOL

# p はこの値以下を想定 (試し割りで素数判定する)
MAX_CHARACTERISTIC = 2 ** 31

# n = 1 のときの法多項式 (恒等的な仮置き、使われない)
PRIME_FIELD_MODULUS = (0, 1)


def is_prime(p: int) -> bool:
    """試し割りによる素数判定"""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# GF(p) 上の一変数多項式 (低次から並べた int のリスト、末尾に 0 を持たない)
# ---------------------------------------------------------------------------

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: List[int], b: List[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    r = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(r)


def _poly_mul(a: List[int], b: List[int], p: int) -> List[int]:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    return _trim(r)


def _poly_divmod(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    if not b:
        raise FieldDivisionByZeroError("零多項式で割ることはできません")
    r = list(a)
    if len(r) < len(b):
        return [], r
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - len(b) + 1)
    for i in range(len(r) - len(b), -1, -1):
        c = (r[i + len(b) - 1] * inv_lead) % p
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] - c * bj) % p
    return _trim(q), _trim(r[:len(b) - 1])


def _poly_gcd(a: List[int], b: List[int], p: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _poly_powmod(base: List[int], e: int, modulus: List[int], p: int) -> List[int]:
    result = [1]
    base = _poly_divmod(base, modulus, p)[1]
    while e:
        if e & 1:
            result = _poly_divmod(_poly_mul(result, base, p), modulus, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), modulus, p)[1]
        e >>= 1
    return result


def is_irreducible_modulus(coeffs: Sequence[int], p: int) -> bool:
    """
    GF(p) 上のモニック多項式が既約かどうか

    gcd(f, t^{p^i} - t) = 1 を i <= deg/2 で確認する。
    次数 3 以下では i = 1 だけなので根の有無の判定と同じ。

    Args:
        coeffs: 低次から並べた係数
        p: 標数

    Returns:
        既約なら True
    """
    f = _trim([c % p for c in coeffs])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False
    t = [0, 1]
    power = t
    for _ in range(n // 2):
        power = _poly_powmod(power, p, f, p)
        if len(_poly_gcd(f, _poly_sub(power, t, p), p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# 体と元
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """有限体 GF(p^n) の仕様"""
    p: int
    n: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p <= MAX_CHARACTERISTIC or not is_prime(self.p):
            raise InvalidFieldError(f"標数が素数ではありません: {self.p}")
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidFieldError(f"拡大次数は 1 以上の整数です: {self.n}")
        modulus = tuple(int(c) for c in self.modulus)
        if len(modulus) != self.n + 1 or modulus[-1] != 1:
            raise InvalidFieldError(f"法多項式はモニックで次数 {self.n} である必要があります: {modulus}")
        if any(not 0 <= c < self.p for c in modulus):
            raise InvalidFieldError(f"法多項式の係数は 0..{self.p - 1} の範囲です: {modulus}")
        if self.n > 1 and not is_irreducible_modulus(modulus, self.p):
            raise InvalidFieldError(f"法多項式が GF({self.p}) 上で可約です: {modulus}")
        object.__setattr__(self, 'modulus', modulus)

    @property
    def order(self) -> int:
        """元の個数 p^n"""
        return self.p ** self.n

    @property
    def is_prime_field(self) -> bool:
        return self.n == 1

    def zero(self) -> 'FieldElement':
        return FieldElement(self, (0,) * self.n)

    def one(self) -> 'FieldElement':
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def generator(self) -> 'FieldElement':
        """法多項式の根 a"""
        if self.n == 1:
            raise InvalidFieldError(f"素体 GF({self.p}) には生成元 '{GENERATOR_SYMBOL}' がありません")
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def element(self, value: Union[int, Sequence[int]]) -> 'FieldElement':
        """
        整数または係数列から元を作る

        Args:
            value: 整数 (素体部分の元として mod p) または低次から並べた係数列

        Returns:
            正規化された元
        """
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.n:
            raise InvalidFieldError(f"係数が多すぎます (最大 {self.n} 個): {list(value)}")
        return FieldElement(self, tuple(coeffs) + (0,) * (self.n - len(coeffs)))

    def from_index(self, index: int) -> 'FieldElement':
        """正準順序での index 番目の元 (係数を p 進数の桁とみなす、低位が最速)"""
        digits = []
        for _ in range(self.n):
            index, r = divmod(index, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def __str__(self) -> str:
        if self.n == 1:
            return f"GF({self.p})"
        if self.modulus == field_build(self.p, self.n).modulus:
            return f"GF({self.p}^{self.n})"
        return f"GF({self.p}^{self.n}; {','.join(str(c) for c in self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    """有限体の元 (剰余多項式の係数、低次から)"""
    field: FieldSpec
    coeffs: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    @property
    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def index(self) -> int:
        """正準順序での番号"""
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.field.p + c
        return value

    def _coerce(self, other) -> 'FieldElement':
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, inv(other))

    def __pow__(self, e: int):
        return power(self, e)

    def __str__(self) -> str:
        if self.in_prime_field:
            return str(self.coeffs[0])
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                base = GENERATOR_SYMBOL if i == 1 else f"{GENERATOR_SYMBOL}^{i}"
                parts.append(base if c == 1 else f"{c}{base}")
        return '+'.join(parts)

    def __repr__(self) -> str:
        return f"FieldElement({self}, {self.field})"


# ---------------------------------------------------------------------------
# 体の構成
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def field_build(p: int, n: int = 1) -> FieldSpec:
    """
    GF(p^n) を構成する

    Args:
        p: 標数 (素数)
        n: 拡大次数

    Returns:
        辞書順最小のモニック既約多項式を法とする FieldSpec

    Raises:
        InvalidFieldError: p が素数でない、n < 1 の場合
    """
    if not isinstance(p, int) or not 2 <= p <= MAX_CHARACTERISTIC or not is_prime(p):
        raise InvalidFieldError(f"標数が素数ではありません: {p}")
    if not isinstance(n, int) or n < 1:
        raise InvalidFieldError(f"拡大次数は 1 以上の整数です: {n}")
    if n == 1:
        return FieldSpec(p, 1, PRIME_FIELD_MODULUS)

    # タプルの先頭 (定数項) が最上位になる順序で列挙 = 低次係数からの辞書順
    for lower in itertools.product(range(p), repeat=n):
        if lower[0] == 0:
            continue  # t で割り切れる
        candidate = lower + (1,)
        if is_irreducible_modulus(candidate, p):
            return FieldSpec(p, n, candidate)
    raise InvalidFieldError(f"GF({p}) 上に次数 {n} の既約多項式が見つかりません")


# ---------------------------------------------------------------------------
# 演算
# ---------------------------------------------------------------------------

def _check_same(x: FieldElement, y: FieldElement):
    if x.field != y.field:
        raise FieldMismatchError(f"異なる体の元です: {x.field} と {y.field}")


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x, y)
    p = x.field.p
    return FieldElement(x.field, tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x, y)
    p = x.field.p
    return FieldElement(x.field, tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)))


def neg(x: FieldElement) -> FieldElement:
    p = x.field.p
    return FieldElement(x.field, tuple((-a) % p for a in x.coeffs))


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    """積 (剰余多項式の積を法多項式で簡約)"""
    _check_same(x, y)
    spec = x.field
    p, n = spec.p, spec.n
    if n == 1:
        return FieldElement(spec, ((x.coeffs[0] * y.coeffs[0]) % p,))

    product = [0] * (2 * n - 1)
    for i, a in enumerate(x.coeffs):
        if a:
            for j, b in enumerate(y.coeffs):
                if b:
                    product[i + j] += a * b
    # t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
    modulus = spec.modulus
    for k in range(2 * n - 2, n - 1, -1):
        c = product[k] % p
        if c:
            for j in range(n):
                product[k - n + j] -= c * modulus[j]
    return FieldElement(spec, tuple(c % p for c in product[:n]))


def inv(x: FieldElement) -> FieldElement:
    """
    逆元 (拡張ユークリッド互除法)

    Raises:
        FieldDivisionByZeroError: x = 0 の場合
    """
    if x.is_zero:
        raise FieldDivisionByZeroError(f"{x.field} で 0 の逆元は存在しません")
    spec = x.field
    p = spec.p
    if spec.n == 1:
        return FieldElement(spec, (pow(x.coeffs[0], p - 2, p),))

    # s * x ≡ g (mod modulus)
    a, b = list(spec.modulus), _trim(list(x.coeffs))
    s0, s1 = [], [1]
    while b:
        q, r = _poly_divmod(a, b, p)
        a, b = b, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
    # a は非零定数
    scale = pow(a[0], p - 2, p)
    coeffs = [(c * scale) % p for c in s0]
    return FieldElement(spec, tuple(coeffs) + (0,) * (spec.n - len(coeffs)))


def power(x: FieldElement, e: int) -> FieldElement:
    """
    累乗 (二乗と乗算)。power(x, 0) は x = 0 を含めて 1 とする
    """
    if e < 0:
        return power(inv(x), -e)
    result = x.field.one()
    base = x
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def frobenius(x: FieldElement) -> FieldElement:
    """フロベニウス写像 x -> x^p"""
    return power(x, x.field.p)


def enumerate_elements(spec: FieldSpec, budget: int = ENUMERATION_BUDGET) -> Iterator[FieldElement]:
    """
    体のすべての元を正準順序で列挙 (係数を p 進カウンタとみなし、低位が最速)

    Raises:
        ScopeError: p^n が予算を超える場合
    """
    if spec.order > budget:
        raise ScopeError(f"{spec} の元の個数 {spec.order} が列挙予算 {budget} を超えています")
    for digits in itertools.product(range(spec.p), repeat=spec.n):
        yield FieldElement(spec, digits[::-1])


@lru_cache(maxsize=None)
def _embedding_root(source: FieldSpec, target: FieldSpec) -> FieldElement:
    # 正準順序で最小の根
    for candidate in enumerate_elements(target):
        value = target.zero()
        for c in reversed(source.modulus):
            value = add(mul(value, candidate), target.element(c))
        if value.is_zero:
            return candidate
    raise EmbeddingError(f"{target} に {source} の法多項式の根がありません")


def embed(x: FieldElement, target: FieldSpec) -> FieldElement:
    """
    GF(p^n) の元を GF(p^{nk}) へ埋め込む

    法多項式の根を目的の体で探して a をその根に送る環準同型。

    Raises:
        EmbeddingError: 標数が異なる、または次数が割り切れない場合
    """
    source = x.field
    if source == target:
        return x
    if source.p != target.p or target.n % source.n != 0:
        raise EmbeddingError(f"{source} を {target} に埋め込めません")
    if source.n == 1:
        return target.element(x.coeffs[0])

    root = _embedding_root(source, target)
    value = target.zero()
    for c in reversed(x.coeffs):
        value = add(mul(value, root), target.element(c))
    return value
