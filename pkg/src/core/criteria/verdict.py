"""
Verdict
判定結果と、判定の根拠となる仮説の束
"""
from dataclasses import dataclass
from typing import ClassVar, Optional, Tuple, Union

from core.gcd import SquarefreeReport
from core.polynomial import GapProfile, GradedDecomposition, Polynomial
from utils.constants import (
    RULE_BINARY_FORM_SPLIT,
    RULE_NONE,
    VERDICT_ABSOLUTELY_IRREDUCIBLE,
    VERDICT_FACTOR_BOUNDS,
    VERDICT_INCONCLUSIVE,
    VERDICT_NOT_ABSOLUTELY_IRREDUCIBLE,
)


@dataclass(frozen=True)
class Hypotheses:
    """
    判定に使う仮説の検証結果

    Attributes:
        leading_squarefree: F_d が無平方か
        squarefree_report: F_d の無平方判定の詳細
        forms_gcd_trivial: すべての斉次成分の GCD が 1 か
        forms_gcd: その GCD
        decomposition: 斉次分解
        gap_profile: ギャップ列
        span_status: i 番目が True なら γ_i ∈ span_N{γ_1, ..., γ_{i-1}}
        pairwise_gcd: k 番目が True なら gcd(F_d, F_{d-γ_k}) = 1
        tail_gcd_trivial: gcd(F_d, H) = 1 か (H は F_d 以外の成分の和、斉次なら None)
    """
    leading_squarefree: bool
    squarefree_report: SquarefreeReport
    forms_gcd_trivial: bool
    forms_gcd: Polynomial
    decomposition: GradedDecomposition
    gap_profile: GapProfile
    span_status: Tuple[bool, ...]
    pairwise_gcd: Tuple[bool, ...]
    tail_gcd_trivial: Optional[bool]

    @property
    def form_count(self) -> int:
        return len(self.decomposition)


@dataclass(frozen=True)
class AbsolutelyIrreducible:
    """絶対既約"""
    rule: str
    hypotheses: Optional[Hypotheses]
    kind: ClassVar[str] = VERDICT_ABSOLUTELY_IRREDUCIBLE


@dataclass(frozen=True)
class FactorBounds:
    """因子の個数の上限 (重複度込み、代数閉包上) と因子の次数の下限"""
    max_factors: int
    min_factor_degree: Optional[int]
    rule: str
    hypotheses: Optional[Hypotheses]
    kind: ClassVar[str] = VERDICT_FACTOR_BOUNDS


@dataclass(frozen=True)
class NotAbsolutelyIrreducible:
    """絶対既約でない (witness は拡大体上の非自明な因子)"""
    witness: Polynomial
    hypotheses: Optional[Hypotheses] = None
    rule: str = RULE_BINARY_FORM_SPLIT
    kind: ClassVar[str] = VERDICT_NOT_ABSOLUTELY_IRREDUCIBLE


@dataclass(frozen=True)
class Inconclusive:
    """どの規則も適用できない (可約とは主張しない)"""
    failed: Tuple[str, ...]
    hypotheses: Optional[Hypotheses]
    rule: str = RULE_NONE
    kind: ClassVar[str] = VERDICT_INCONCLUSIVE


Verdict = Union[AbsolutelyIrreducible, FactorBounds, NotAbsolutelyIrreducible, Inconclusive]
