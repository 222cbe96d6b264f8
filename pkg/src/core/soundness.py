"""
Soundness
判定結果をオラクルと照合する (sample / selftest とテストで共有)
"""
from dataclasses import dataclass
from typing import Literal, Optional

from core.criteria.checker_factory import CheckerFactory
from core.criteria.hypotheses import compute_hypotheses
from core.criteria.verdict import (
    AbsolutelyIrreducible,
    FactorBounds,
    Inconclusive,
    NotAbsolutelyIrreducible,
    Verdict,
)
from core.errors import ScopeError
from core.gcd import is_squarefree
from core.oracle.absolute import count_absolute_factors, is_absolutely_irreducible
from core.oracle.squarefree import is_squarefree_bruteforce
from core.polynomial import Polynomial, divides, lift_to_extension, total_degree
from utils.logger import get_logger

logger = get_logger(__name__)

Status = Literal['ok', 'violation', 'scope', 'skipped', 'near_miss']


@dataclass(frozen=True)
class SoundnessOutcome:
    """
    照合結果

    Attributes:
        status: ok / violation / scope (オラクルが予算外) / skipped (照合対象外) / near_miss
        detail: 違反や near miss の説明
    """
    status: Status
    detail: str = ''


def _witness_ok(f: Polynomial, witness: Polynomial) -> bool:
    # 非自明で、拡大体上で f を割り切ること
    if not 1 <= total_degree(witness) < total_degree(f):
        return False
    return divides(witness, lift_to_extension(f, witness.field))


def check_soundness(f: Polynomial, verdict: Verdict, budget: Optional[int] = None,
                    near_misses: bool = False) -> SoundnessOutcome:
    """
    判定をオラクルで検証する

    Args:
        f: 判定した多項式
        verdict: analyze の結果
        budget: オラクルの候補数の上限
        near_misses: Inconclusive についてもオラクルを呼ぶか

    Returns:
        SoundnessOutcome
    """
    if isinstance(verdict, NotAbsolutelyIrreducible):
        if _witness_ok(f, verdict.witness):
            return SoundnessOutcome('ok')
        return SoundnessOutcome('violation', f"witness {verdict.witness} は {f} の非自明な因子ではありません")

    if f.arity != 2 or f.is_constant:
        return SoundnessOutcome('skipped')
    if isinstance(verdict, Inconclusive) and not near_misses:
        return SoundnessOutcome('skipped')

    try:
        if isinstance(verdict, FactorBounds):
            counted = count_absolute_factors(f, budget)
            if counted.count > verdict.max_factors:
                return SoundnessOutcome(
                    'violation',
                    f"{f}: 因子 {counted.count} 個 > 上限 {verdict.max_factors} ({verdict.rule})")
            if (verdict.min_factor_degree is not None
                    and min(counted.factor_degrees) < verdict.min_factor_degree):
                return SoundnessOutcome(
                    'violation',
                    f"{f}: 因子の次数 {min(counted.factor_degrees)} < 下限 {verdict.min_factor_degree} ({verdict.rule})")
            return SoundnessOutcome('ok')

        report = is_absolutely_irreducible(f, budget)
    except ScopeError as e:
        logger.debug("オラクルが予算外: %s (%s)", f, e)
        return SoundnessOutcome('scope', str(e))

    if isinstance(verdict, AbsolutelyIrreducible):
        if report.absolutely_irreducible:
            return SoundnessOutcome('ok')
        return SoundnessOutcome(
            'violation', f"{f}: {verdict.rule} は絶対既約と判定したが因子 {report.max_factor_count} 個")

    # Inconclusive
    if not report.absolutely_irreducible:
        return SoundnessOutcome('near_miss', f"{f}: {', '.join(verdict.failed)} が不成立、因子 {report.max_factor_count} 個")
    return SoundnessOutcome('ok')


def subsumption_violation(f: Polynomial, verdict: Verdict) -> Optional[str]:
    """
    成分が少ない場合の判定器が成立するのに analyze が絶対既約としないなら説明を返す
    """
    if f.is_constant:
        return None
    hypotheses = verdict.hypotheses if verdict.hypotheses is not None else compute_hypotheses(f)
    for checker in CheckerFactory.all_checkers():
        fired = checker.check(f, hypotheses)
        if fired is not None and not isinstance(verdict, AbsolutelyIrreducible):
            return f"{f}: {checker.get_rule()} が成立するが analyze は {verdict.kind} ({verdict.rule})"
    return None


def squarefree_disagreement(f: Polynomial, budget: Optional[int] = None) -> Optional[str]:
    """
    gcd による無平方判定と分解による判定が食い違えば説明を返す

    Raises:
        ScopeError: 分解が予算を超える場合
    """
    fast = is_squarefree(f).squarefree
    slow = is_squarefree_bruteforce(f, budget)
    if fast != slow:
        return f"{f}: gcd 判定 {fast}、分解による判定 {slow}"
    return None
