"""
Criteria package
次数ギャップ条件による絶対既約性の判定
"""
from .verdict import (
    AbsolutelyIrreducible,
    FactorBounds,
    Hypotheses,
    Inconclusive,
    NotAbsolutelyIrreducible,
    Verdict,
)
from .hypotheses import compute_hypotheses
from .base_checker import BaseChecker
from .checker_factory import CheckerFactory
from .engine import (
    analyze,
    analyze_many,
    build_certificate,
    certificate_json,
    check_binomial,
    check_quadrinomial,
    check_trinomial,
    factor_bound,
)

__all__ = [
    'AbsolutelyIrreducible',
    'FactorBounds',
    'Hypotheses',
    'Inconclusive',
    'NotAbsolutelyIrreducible',
    'Verdict',
    'compute_hypotheses',
    'BaseChecker',
    'CheckerFactory',
    'analyze',
    'analyze_many',
    'build_certificate',
    'certificate_json',
    'check_binomial',
    'check_quadrinomial',
    'check_trinomial',
    'factor_bound',
]
