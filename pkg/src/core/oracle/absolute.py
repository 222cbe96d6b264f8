"""
Absolute Irreducibility Oracle
拡大体での分解による絶対既約性の判定と、代数閉包上の因子の個数

GF(q) 上既約な g が代数閉包上で r 個に分かれるとき、その因子は互いに共役で
GF(q^r) 上に定義され、次数はすべて deg(g)/r になる。GF(q^k) 上では gcd(k, r) 個に
分かれるので、g が GF(q^k) 上で既約であることと gcd(k, r) = 1 は同値。
素数 ℓ が r を割ることと g が GF(q^ℓ) 上で分かれることも同値なので、
deg(g) の素因数 ℓ についてだけ調べれば r が決まる (r <= deg(g) なので
k <= deg(f) の範囲の既約性もすべて正確に分かる)。
"""
import math
from typing import List, Optional, Tuple

from core.errors import DegenerateInputError
from core.finite_field import field_build, power
from core.oracle.bivariate import factor_bivariate, find_divisor
from core.oracle.report import AbsoluteFactorCount, OracleReport
from core.polynomial import Polynomial, lift_to_extension, total_degree
from utils.constants import ENUMERATION_BUDGET
from utils.logger import get_logger

logger = get_logger(__name__)


def _prime_divisors(n: int) -> List[int]:
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


def _apply_frobenius(f: Polynomial, exponent: int) -> Polynomial:
    """係数ごとに c -> c^exponent"""
    return Polynomial(f.field, f.arity, {m: power(c, exponent) for m, c in f.terms.items()})


def _splitting(g: Polynomial, budget: Optional[int]) -> Tuple[int, Polynomial]:
    """
    既約な g が代数閉包上で分かれる個数 r と、GF(q^r) 上の絶対既約因子の1つ
    """
    spec = g.field
    for ell in _prime_divisors(total_degree(g)):
        ext = field_build(spec.p, spec.n * ell)
        divisor = find_divisor(lift_to_extension(g, ext), budget)
        if divisor is not None:
            logger.debug("%s は GF(%d^%d) 上で分かれる", g, spec.p, spec.n * ell)
            r, absolute = _splitting(divisor, budget)
            return ell * r, absolute
    return 1, g


def count_absolute_factors(f: Polynomial, budget: Optional[int] = None) -> AbsoluteFactorCount:
    """
    代数閉包上の因子の個数 (重複度込み)

    Args:
        f: 定数でない二変数多項式
        budget: 約数探索の候補数の上限

    Returns:
        AbsoluteFactorCount (共通の拡大体が列挙予算内なら因子の列も含む)

    Raises:
        ScopeError: 予算を超える場合、または二変数でない場合
    """
    base_factorization = factor_bivariate(f, budget)
    if not base_factorization:
        raise DegenerateInputError("定数の因子は数えられません")

    spec = f.field
    q = spec.order
    count = 0
    degrees: List[int] = []
    pieces = []
    for g, multiplicity in base_factorization:
        r, absolute = _splitting(g, budget)
        count += r * multiplicity
        degrees.extend([total_degree(g) // r] * (r * multiplicity))
        pieces.append((absolute, r, multiplicity))

    splitting = tuple(r for _, r, _ in pieces)
    common = 1
    for r in splitting:
        common = common * r // math.gcd(common, r)

    factors = None
    witness_field = None
    if spec.p ** (spec.n * common) <= ENUMERATION_BUDGET:
        witness_field = field_build(spec.p, spec.n * common)
        collected = []
        for absolute, r, multiplicity in pieces:
            conjugate = lift_to_extension(absolute, witness_field)
            for _ in range(r):
                collected.extend([conjugate] * multiplicity)
                conjugate = _apply_frobenius(conjugate, q)
        factors = tuple(collected)

    return AbsoluteFactorCount(
        count=count,
        factor_degrees=tuple(sorted(degrees)),
        base_factorization=tuple(base_factorization),
        factors=factors,
        witness_field=witness_field,
        splitting_degrees=splitting,
    )


def is_absolutely_irreducible(f: Polynomial, budget: Optional[int] = None) -> OracleReport:
    """
    GF(q^k) (k = 1..deg f) 上の既約性を調べる

    Args:
        f: 定数でない二変数多項式
        budget: 約数探索の候補数の上限

    Returns:
        OracleReport (すべての k で既約なら絶対既約)

    Raises:
        ScopeError: 予算を超える場合、または二変数でない場合
    """
    d = total_degree(f)
    if f.is_zero or d == 0:
        raise DegenerateInputError("定数の既約性は判定できません")
    counted = count_absolute_factors(f, budget)
    tested = tuple(range(1, d + 1))

    base_count = sum(m for _, m in counted.base_factorization)
    if base_count > 1:
        irreducible_over = {k: False for k in tested}
    else:
        irreducible_over = {k: math.gcd(k, counted.count) == 1 for k in tested}

    return OracleReport(
        base_field=f.field,
        tested_extensions=tested,
        irreducible_over=irreducible_over,
        max_factor_count=counted.count,
        sample_factorization=counted.factors,
        witness_field=counted.witness_field,
        factor_degrees=counted.factor_degrees,
    )
