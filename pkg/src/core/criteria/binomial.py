"""
Binomial Checker
成分が 2 つ (F = F_d + F_{d-γ}) の場合の判定器
"""
from typing import Tuple

from core.criteria.base_checker import BaseChecker
from utils.constants import RULE_BINOMIAL


class BinomialChecker(BaseChecker):
    """F_d が無平方で gcd(F_d, F_{d-γ}) = 1 なら絶対既約"""

    FORM_COUNT = 2

    def get_form_count(self) -> int:
        return self.FORM_COUNT

    def get_rule(self) -> str:
        return RULE_BINOMIAL

    def gap_condition(self, gaps: Tuple[int, ...]) -> bool:
        # γ_1 > 0 は空の生成系の span に入らない
        return True
