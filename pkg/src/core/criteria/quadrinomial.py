"""
Quadrinomial Checker
成分が 4 つの場合の判定器
"""
from typing import Tuple

from core.criteria.base_checker import BaseChecker
from core.semigroup import GeneratorSet, span_membership
from utils.constants import RULE_QUADRINOMIAL


class QuadrinomialChecker(BaseChecker):
    """γ_3 ∉ span_N{γ_1, γ_2} なら絶対既約"""

    FORM_COUNT = 4

    def get_form_count(self) -> int:
        return self.FORM_COUNT

    def get_rule(self) -> str:
        return RULE_QUADRINOMIAL

    def gap_condition(self, gaps: Tuple[int, ...]) -> bool:
        first, second, third = gaps
        return not span_membership(third, GeneratorSet((first, second)))
