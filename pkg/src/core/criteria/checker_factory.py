"""
Checker Factory
斉次成分の個数に基づいて適切な判定器を返すファクトリ
"""
from typing import List

from core.criteria.base_checker import BaseChecker
from core.criteria.binomial import BinomialChecker
from core.criteria.quadrinomial import QuadrinomialChecker
from core.criteria.trinomial import TrinomialChecker


class CheckerFactory:
    """判定器ファクトリクラス"""

    @staticmethod
    def get_checker(form_count: int) -> BaseChecker:
        """
        成分の個数に基づいて判定器を返す

        Args:
            form_count: 斉次成分の個数

        Returns:
            適切な判定器インスタンス

        Raises:
            ValueError: 対応する判定器がない場合
        """
        if form_count == BinomialChecker.FORM_COUNT:
            return BinomialChecker()
        elif form_count == TrinomialChecker.FORM_COUNT:
            return TrinomialChecker()
        elif form_count == QuadrinomialChecker.FORM_COUNT:
            return QuadrinomialChecker()
        else:
            raise ValueError(f"サポートされていない成分の個数: {form_count}")

    @staticmethod
    def all_checkers() -> List[BaseChecker]:
        return [BinomialChecker(), TrinomialChecker(), QuadrinomialChecker()]
