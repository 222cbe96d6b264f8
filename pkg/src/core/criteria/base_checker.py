"""
Base Checker - Abstract base class for few-forms criteria
成分の個数が決まった多項式向けの判定器の抽象基底クラス
"""
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from core.criteria.hypotheses import compute_hypotheses
from core.criteria.verdict import AbsolutelyIrreducible, Hypotheses, Verdict
from core.polynomial import Polynomial


class BaseChecker(ABC):
    """判定器の抽象基底クラス"""

    @abstractmethod
    def get_form_count(self) -> int:
        """
        この判定器が対象とする斉次成分の個数を返す

        Returns:
            成分の個数
        """
        pass

    @abstractmethod
    def get_rule(self) -> str:
        """証明書に記録する規則名"""
        pass

    @abstractmethod
    def gap_condition(self, gaps: Tuple[int, ...]) -> bool:
        """
        ギャップ列についての条件

        Args:
            gaps: γ_1 < ... < γ_m (m = 成分の個数 - 1)

        Returns:
            条件を満たせば True
        """
        pass

    def check(self, f: Polynomial, hypotheses: Optional[Hypotheses] = None) -> Optional[Verdict]:
        """
        形・無平方性・GCD・ギャップの条件がそろえば絶対既約と判定する

        Args:
            f: 対象の多項式
            hypotheses: 計算済みの仮説 (省略時はここで計算)

        Returns:
            条件がそろえば AbsolutelyIrreducible、そうでなければ None
        """
        if f.is_zero or f.is_constant:
            return None
        if hypotheses is None:
            hypotheses = compute_hypotheses(f)
        if hypotheses.form_count != self.get_form_count():
            return None
        if not hypotheses.leading_squarefree or not hypotheses.forms_gcd_trivial:
            return None
        if not self.gap_condition(hypotheses.gap_profile.gaps):
            return None
        return AbsolutelyIrreducible(self.get_rule(), hypotheses)
