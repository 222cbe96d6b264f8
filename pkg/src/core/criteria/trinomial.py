"""
Trinomial Checker
成分が 3 つ (F = F_d + F_{d-e} + F_a) の場合の判定器
"""
from typing import Tuple

from core.criteria.base_checker import BaseChecker
from utils.constants import RULE_TRINOMIAL


class TrinomialChecker(BaseChecker):
    """d - a が e の正の倍数でなければ絶対既約"""

    FORM_COUNT = 3

    def get_form_count(self) -> int:
        return self.FORM_COUNT

    def get_rule(self) -> str:
        return RULE_TRINOMIAL

    def gap_condition(self, gaps: Tuple[int, ...]) -> bool:
        first, second = gaps
        return second % first != 0
