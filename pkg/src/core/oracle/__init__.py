"""
Oracle package
小さな体での総当たりによる検証
"""
from .univariate import factor_univariate, monic_polynomials
from .bivariate import (
    binary_form_divisors,
    factor_bivariate,
    find_divisor,
    is_irreducible_bivariate,
)
from .absolute import count_absolute_factors, is_absolutely_irreducible
from .squarefree import is_squarefree_bruteforce
from .report import AbsoluteFactorCount, OracleReport

__all__ = [
    'factor_univariate',
    'monic_polynomials',
    'binary_form_divisors',
    'factor_bivariate',
    'find_divisor',
    'is_irreducible_bivariate',
    'count_absolute_factors',
    'is_absolutely_irreducible',
    'is_squarefree_bruteforce',
    'AbsoluteFactorCount',
    'OracleReport',
]
