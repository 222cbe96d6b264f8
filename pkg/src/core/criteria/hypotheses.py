"""
Hypotheses
斉次分解・ギャップ列・GCD・無平方性・半群の条件をまとめて計算する
"""
from core.criteria.verdict import Hypotheses
from core.gcd import gcd_many, gcd_multivariate, is_squarefree
from core.polynomial import Polynomial, gap_profile, graded_decomposition, poly_sub
from core.semigroup import GeneratorSet, span_membership


def compute_hypotheses(f: Polynomial) -> Hypotheses:
    """
    f の仮説をすべて検証する

    Args:
        f: 定数でない多項式

    Returns:
        Hypotheses

    Raises:
        DegenerateInputError: 零または定数の場合
    """
    profile = gap_profile(f)
    decomposition = graded_decomposition(f)
    leading = decomposition.leading
    report = is_squarefree(leading)

    forms_gcd = gcd_many([form for _, form in decomposition.forms])
    gaps = profile.gaps

    # span_status[0] は空の生成系 (0 しか表せない)
    span_status = tuple(
        span_membership(gap, GeneratorSet(gaps[:i])) for i, gap in enumerate(gaps)
    )
    pairwise = tuple(
        gcd_multivariate(leading, decomposition.form(profile.d - gap)).is_constant
        for gap in gaps
    )
    tail_trivial = None
    if gaps:
        tail_trivial = gcd_multivariate(leading, poly_sub(f, leading)).is_constant

    return Hypotheses(
        leading_squarefree=report.squarefree,
        squarefree_report=report,
        forms_gcd_trivial=forms_gcd.is_constant,
        forms_gcd=forms_gcd,
        decomposition=decomposition,
        gap_profile=profile,
        span_status=span_status,
        pairwise_gcd=pairwise,
        tail_gcd_trivial=tail_trivial,
    )
