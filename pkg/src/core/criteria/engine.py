"""
Criteria Engine
次数ギャップと数値半群の条件による絶対既約性の判定と証明書の生成

規則の優先順位:
  1. 主定理        γ_m ∉ span_N{γ_1, ..., γ_{m-1}}
  2. 二重ギャップ  γ_K ∉ span_N{γ_1, ..., γ_{K-1}}, gcd(F_d, F_{d-γ_K}) = 1, γ_m < 2γ_K
  3. K 番目の上限  因子は高々 ⌊d/γ_K⌋ 個、各因子の次数は γ_K 以上
  4. 次数ギャップ  gcd(F_d, H) = 1 なら因子は高々 ⌊d/γ_1⌋ 個
仮説が成り立たないときは Inconclusive とし、可約とは主張しない。
"""
import json
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from core.criteria.checker_factory import CheckerFactory
from core.criteria.hypotheses import compute_hypotheses
from core.criteria.verdict import (
    AbsolutelyIrreducible,
    FactorBounds,
    Hypotheses,
    Inconclusive,
    NotAbsolutelyIrreducible,
    Verdict,
)
from core.errors import DegenerateInputError, ScopeError
from core.finite_field import enumerate_elements, field_build
from core.gcd import is_squarefree, normalize
from core.polynomial import (
    Polynomial,
    change_arity,
    dehomogenize,
    divides,
    evaluate,
    graded_decomposition,
    lift_to_extension,
    total_degree,
)
from core.polynomial_parser import format_polynomial
from utils.constants import (
    HYP_CONSTANT,
    HYP_FORMS_GCD,
    HYP_HOMOGENEOUS,
    HYP_LEADING_SQUAREFREE,
    HYP_PAIRWISE_GCD,
    HYP_SPAN,
    HYP_TAIL_GCD,
    PROGRESS_INTERVAL,
    RULE_DEGREE_GAP_BOUND,
    RULE_DEGREE_GAP_BOUND_DEGENERATE,
    RULE_DEGREE_ONE,
    RULE_DOUBLE_GAP,
    RULE_KTH_GAP_BOUND,
    RULE_MAIN_THEOREM,
)
from utils.logger import get_logger

logger = get_logger(__name__)


def _split_homogeneous(f: Polynomial) -> Polynomial:
    """
    2 変数以下にしか依存しない斉次式の一次因子を探す

    1 変数なら その変数、そうでなければ f(u, 1) の根 r を GF(q^k) (k = 1, 2, ...) で
    探して u - r·v を返す。
    """
    support = f.variables_used()
    if len(support) == 1:
        return Polynomial.variable(f.field, f.arity, support[0])

    u, v = support
    for index in (v, u):
        var = Polynomial.variable(f.field, f.arity, index)
        if divides(var, f):
            return var

    g = change_arity(dehomogenize(f, v), 1, [0] * f.arity)
    base = f.field
    for k in range(1, total_degree(g) + 1):
        ext = field_build(base.p, base.n * k)
        lifted = lift_to_extension(g, ext)
        for r in enumerate_elements(ext):
            if evaluate(lifted, [r]).is_zero:
                witness = (Polynomial.variable(ext, f.arity, u)
                           - Polynomial.variable(ext, f.arity, v) * r)
                logger.debug("斉次式の一次因子を GF(%d^%d) で発見", base.p, base.n * k)
                return witness
    # 二元形式は代数閉包で一次式に分解するので到達しない
    raise ScopeError("二元形式の根が見つかりません")


def analyze(f: Polynomial) -> Verdict:
    """
    絶対既約性を判定する

    Args:
        f: 零でない多項式

    Returns:
        Verdict (規則と検証済みの仮説を含む)

    Raises:
        DegenerateInputError: 零多項式の場合
        ScopeError: 斉次式の根探索が列挙予算を超えた場合
    """
    if f.is_zero:
        raise DegenerateInputError("零多項式は判定できません")
    d = total_degree(f)
    if d == 0:
        return Inconclusive((HYP_CONSTANT,), None)

    hyp = compute_hypotheses(f)
    if d == 1:
        return AbsolutelyIrreducible(RULE_DEGREE_ONE, hyp)

    if f.is_homogeneous:
        if len(f.variables_used()) <= 2:
            return NotAbsolutelyIrreducible(_split_homogeneous(f), hyp)
        return Inconclusive((HYP_HOMOGENEOUS,), hyp)

    if not hyp.leading_squarefree:
        return Inconclusive((HYP_LEADING_SQUAREFREE,), hyp)
    if not hyp.forms_gcd_trivial:
        return Inconclusive((HYP_FORMS_GCD,), hyp)

    gaps = hyp.gap_profile.gaps
    m = len(gaps)
    if not hyp.span_status[m - 1]:
        return AbsolutelyIrreducible(RULE_MAIN_THEOREM, hyp)

    candidates = [k for k in range(1, m + 1)
                  if not hyp.span_status[k - 1] and hyp.pairwise_gcd[k - 1]]
    if candidates:
        k = max(candidates)
        gamma_k = gaps[k - 1]
        logger.debug("K = %d (γ_K = %d, γ_m = %d)", k, gamma_k, gaps[-1])
        if gaps[-1] < 2 * gamma_k:
            return AbsolutelyIrreducible(RULE_DOUBLE_GAP, hyp)
        return FactorBounds(d // gamma_k, gamma_k, RULE_KTH_GAP_BOUND, hyp)

    if hyp.tail_gcd_trivial:
        bound = d // gaps[0]
        if bound == 1:
            return AbsolutelyIrreducible(RULE_DEGREE_GAP_BOUND_DEGENERATE, hyp)
        return FactorBounds(bound, None, RULE_DEGREE_GAP_BOUND, hyp)

    return Inconclusive((HYP_SPAN, HYP_PAIRWISE_GCD, HYP_TAIL_GCD), hyp)


def analyze_many(
    polys: Sequence[Polynomial],
    progress_callback: Optional[Callable[[int, str], None]] = None
) -> List[Verdict]:
    """
    複数の多項式をまとめて判定

    Args:
        polys: 多項式のリスト
        progress_callback: 進捗コールバック関数 (progress%, message)

    Returns:
        入力と同じ順の Verdict のリスト
    """
    verdicts = []
    total = len(polys)
    for i, f in enumerate(polys, start=1):
        verdicts.append(analyze(f))
        if progress_callback and (i % PROGRESS_INTERVAL == 0 or i == total):
            progress_callback(int(i * 100 / total), f"{i}/{total} 件を判定しました")
    return verdicts


def _few_forms(f: Polynomial, form_count: int) -> Optional[Verdict]:
    checker = CheckerFactory.get_checker(form_count)
    return checker.check(f)


def check_binomial(f: Polynomial) -> Optional[Verdict]:
    """成分が 2 つの場合の判定 (条件がそろわなければ None)"""
    return _few_forms(f, 2)


def check_trinomial(f: Polynomial) -> Optional[Verdict]:
    """成分が 3 つの場合の判定 (条件がそろわなければ None)"""
    return _few_forms(f, 3)


def check_quadrinomial(f: Polynomial) -> Optional[Verdict]:
    """成分が 4 つの場合の判定 (条件がそろわなければ None)"""
    return _few_forms(f, 4)


def factor_bound(f: Polynomial, verdict: Optional[Verdict] = None) -> Optional[Tuple[int, Optional[int]]]:
    """
    因子の個数の上限と因子の次数の下限

    Returns:
        (max_factors, min_factor_degree)。絶対既約なら (1, None)、上限がなければ None
    """
    if verdict is None:
        verdict = analyze(f)
    if isinstance(verdict, AbsolutelyIrreducible):
        return 1, None
    if isinstance(verdict, FactorBounds):
        return verdict.max_factors, verdict.min_factor_degree
    return None


# ---------------------------------------------------------------------------
# 証明書
# ---------------------------------------------------------------------------

def _hypothesis_summary(f: Polynomial, hyp: Optional[Hypotheses]) -> Dict[str, Any]:
    if hyp is not None:
        return {
            'degree': hyp.gap_profile.d,
            'gaps': list(hyp.gap_profile.gaps),
            'span_status': list(hyp.span_status),
            'leading_squarefree': hyp.leading_squarefree,
            'forms_gcd': format_polynomial(hyp.forms_gcd),
        }
    # 定数
    decomposition = graded_decomposition(f)
    return {
        'degree': decomposition.degrees[0],
        'gaps': [],
        'span_status': [],
        'leading_squarefree': is_squarefree(decomposition.leading).squarefree,
        'forms_gcd': format_polynomial(normalize(f)),
    }


def build_certificate(f: Polynomial, verdict: Verdict) -> Dict[str, Any]:
    """
    判定結果の証明書 (JSON に変換できる辞書)

    Args:
        f: 判定した多項式
        verdict: analyze の結果

    Returns:
        verdict, rule, degree, gaps, span_status, leading_squarefree, forms_gcd, field
        と、判定に応じて max_factors, min_factor_degree, witness, witness_field, failed_hypotheses
    """
    certificate: Dict[str, Any] = {
        'verdict': verdict.kind,
        'rule': verdict.rule,
        'field': str(f.field),
    }
    certificate.update(_hypothesis_summary(f, verdict.hypotheses))

    if isinstance(verdict, FactorBounds):
        certificate['max_factors'] = verdict.max_factors
        if verdict.min_factor_degree is not None:
            certificate['min_factor_degree'] = verdict.min_factor_degree
    elif isinstance(verdict, NotAbsolutelyIrreducible):
        certificate['witness'] = format_polynomial(verdict.witness)
        certificate['witness_field'] = str(verdict.witness.field)
    elif isinstance(verdict, Inconclusive):
        certificate['failed_hypotheses'] = list(verdict.failed)
    return certificate


def certificate_json(certificate: Dict[str, Any]) -> str:
    """キーを並べ替えた JSON 文字列 (同じ入力なら同じバイト列)"""
    return json.dumps(certificate, sort_keys=True, ensure_ascii=False)
