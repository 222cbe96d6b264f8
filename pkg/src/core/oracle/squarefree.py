"""
Squarefree Oracle
分解による無平方判定 (gcd による判定の照合用)
"""
from typing import Optional

from core.errors import DegenerateInputError, ScopeError
from core.oracle.bivariate import factor_bivariate
from core.oracle.univariate import factor_univariate
from core.polynomial import Polynomial, total_degree


def is_squarefree_bruteforce(f: Polynomial, budget: Optional[int] = None) -> bool:
    """
    基礎体上の完全分解に重複がなく、f が p 乗の形でもないなら無平方

    Raises:
        ScopeError: 3 変数以上、または予算を超える場合
    """
    if f.is_zero:
        raise DegenerateInputError("零多項式の無平方判定はできません")
    if f.arity > 2:
        raise ScopeError(f"3 変数以上は対象外です (arity={f.arity})")
    if total_degree(f) == 0:
        return True

    p = f.field.p
    if all(e % p == 0 for m in f.terms for e in m):
        return False

    factors = factor_univariate(f, budget) if f.arity == 1 else factor_bivariate(f, budget)
    return all(multiplicity == 1 for _, multiplicity in factors)
