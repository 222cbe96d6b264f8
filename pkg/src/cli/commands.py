"""
Commands
サブコマンドの実装 (結果は標準出力、ログは標準エラー)
"""
import json
import random
import sys
from typing import Any, Callable, Dict, Iterable, List, Optional

import pandas as pd

from cli.batch import BatchProcessor
from cli.exit_codes import error_record, exit_code_for
from core.certificate_writer import CertificateExcelWriter
from core.criteria import CheckerFactory, analyze, build_certificate, certificate_json
from core.criteria.hypotheses import compute_hypotheses
from core.errors import AbsIrrError, ConfigError, DegenerateInputError
from core.finite_field import field_build
from core.gcd import is_squarefree
from core.oracle import is_absolutely_irreducible
from core.polynomial import INFINITY, Polynomial, change_arity, degree_gap, total_degree
from core.polynomial_parser import format_polynomial, parse_field_spec, parse_polynomial
from core.sampling import iter_normalized_of_degree, iter_polynomials, random_polynomial
from core.semigroup import GeneratorSet, gaps_below, span_membership
from core.soundness import check_soundness, squarefree_disagreement, subsumption_violation
from utils.config import CliConfig
from utils.constants import (
    EXIT_OK,
    EXIT_VIOLATION,
    PROGRESS_INTERVAL,
    SQUAREFREE_CHECK_MAX_DEGREE,
)
from utils.logger import get_logger

logger = get_logger(__name__)


def _emit(text: str = ''):
    print(text)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ','.join(_format_value(v) for v in value) if value else '-'
    if isinstance(value, dict):
        return ' '.join(f"{k}:{_format_value(v)}" for k, v in value.items())
    if value is None:
        return '-'
    return str(value)


def _emit_record(record: Dict[str, Any], config: CliConfig):
    if config.output_mode == 'json':
        _emit(certificate_json(record))
    else:
        for key in sorted(record):
            _emit(f"{key}: {_format_value(record[key])}")


def _log_progress(percent: int, message: str):
    logger.info("[%3d%%] %s", percent, message)


def _parse_input(config: CliConfig) -> Polynomial:
    """
    --field と --poly から多項式を作る

    Raises:
        ConfigError: 指定がない場合
        ParseError: 構文エラー
    """
    if not config.field_text or config.poly_text is None:
        raise ConfigError("--field と --poly を指定してください")
    field = parse_field_spec(config.field_text)
    return parse_polynomial(config.poly_text, field, config.arity)


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(config: CliConfig) -> int:
    """
    絶対既約性を判定して証明書を出力 (判定の内容によらず 0)
    """
    if config.input_path is not None:
        return _check_batch(config)

    f = _parse_input(config)
    verdict = analyze(f)
    certificate = build_certificate(f, verdict)
    certificate['input'] = format_polynomial(f)
    _emit_record(certificate, config)

    if config.xlsx_dir is not None:
        path = CertificateExcelWriter(config.xlsx_dir, 'check').write_records([certificate])
        logger.info("xlsx を出力しました: %s", path)
    return EXIT_OK


def _check_batch(config: CliConfig) -> int:
    # 1行1件の JSON-lines。終了コードは最初に失敗した行のもの
    records, _, error_msg = BatchProcessor().process(config.input_path, config.xlsx_dir, _log_progress)
    if records is None:
        raise ConfigError(error_msg)

    status = EXIT_OK
    for record in records:
        _emit(certificate_json(record))
        if status == EXIT_OK and 'exit_code' in record:
            status = record['exit_code']
    return status


# ---------------------------------------------------------------------------
# decompose
# ---------------------------------------------------------------------------

def _span_flags(span_status) -> List[str]:
    # 先頭は生成系が空なので '-'
    return ['-'] + ['inside' if s else 'outside' for s in span_status[1:]]


def cmd_decompose(config: CliConfig) -> int:
    """斉次分解・ギャップ列・仮説の検証結果を出力"""
    f = _parse_input(config)
    if f.is_zero or f.is_constant:
        raise DegenerateInputError("定数多項式は斉次分解の対象外です")

    hyp = compute_hypotheses(f)
    gap = degree_gap(f)
    gaps = list(hyp.gap_profile.gaps)
    report = {
        'field': str(f.field),
        'input': format_polynomial(f),
        'degree': hyp.gap_profile.d,
        'forms': {str(d): format_polynomial(form) for d, form in hyp.decomposition.forms},
        'degree_gap': 'infinity' if gap == INFINITY else gap,
        'gaps': gaps,
        'span': _span_flags(hyp.span_status) if gaps else [],
        'tangent_cone_degree': hyp.gap_profile.tangent_cone_degree,
        'leading_squarefree': hyp.leading_squarefree,
        'forms_gcd': format_polynomial(hyp.forms_gcd),
        'pairwise_gcd_trivial': list(hyp.pairwise_gcd),
        'tail_gcd_trivial': hyp.tail_gcd_trivial,
    }

    if config.output_mode == 'json':
        _emit(json.dumps(report, sort_keys=True, ensure_ascii=False))
        return EXIT_OK

    _emit(f"field: {report['field']}")
    _emit(f"degree: {report['degree']}")
    _emit("forms:")
    for d, form in hyp.decomposition.forms:
        _emit(f"  F_{d} = {format_polynomial(form)}")
    _emit(f"degree-gap: {report['degree_gap']}")
    _emit(f"gaps: {_format_value(gaps)}")
    _emit(f"span: {', '.join(report['span']) if gaps else '-'}")
    _emit(f"tangent-cone degree: {report['tangent_cone_degree']}")
    _emit(f"leading squarefree: {_format_value(hyp.leading_squarefree)}")
    _emit(f"forms gcd: {report['forms_gcd']}")
    _emit(f"pairwise gcd trivial: {_format_value(report['pairwise_gcd_trivial'])}")
    _emit(f"tail gcd trivial: {_format_value(hyp.tail_gcd_trivial)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# span
# ---------------------------------------------------------------------------

def cmd_span(config: CliConfig, target: int, generators: Iterable[int]) -> int:
    """target の所属と target 未満のギャップを出力"""
    if target < 0:
        raise ConfigError(f"target は 0 以上です: {target}")
    try:
        gens = GeneratorSet.of(generators)
    except ValueError as e:
        raise ConfigError(str(e)) from None

    member = span_membership(target, gens)
    gaps = gaps_below(target, gens) if target >= 1 else []

    if config.output_mode == 'json':
        _emit(json.dumps({
            'target': target,
            'generators': list(gens),
            'representable': member,
            'gaps_below': gaps,
        }, sort_keys=True))
    else:
        status = 'representable' if member else 'not representable'
        listed = ','.join(str(g) for g in gaps) if gaps else 'none'
        _emit(f"{status}; gaps below {target}: {listed}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def cmd_oracle(config: CliConfig) -> int:
    """
    拡大体で総当たりした結果を出力

    一変数の入力は y を加えた二変数として扱う。
    """
    f = _parse_input(config)
    if f.arity == 1:
        f = change_arity(f, 2, [0])
    report = is_absolutely_irreducible(f, config.oracle_budget)
    data = report.to_dict()
    data['input'] = format_polynomial(f)
    _emit_record(data, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sample
# ---------------------------------------------------------------------------

def _rate(series: pd.Series) -> float:
    return round(float(series.mean()), 6) if len(series) else 0.0


def _sample_polys(config: CliConfig, field) -> Iterable[Polynomial]:
    if config.sample_count is None:
        return iter_normalized_of_degree(field, config.sample_arity, config.sample_degree,
                                         config.oracle_budget)
    rng = random.Random(config.seed)
    return (random_polynomial(rng, field, config.sample_arity, config.sample_degree)
            for _ in range(config.sample_count))


def _sweep(polys: Iterable[Polynomial], total: Optional[int],
           inspect: Callable[[Polynomial], Dict[str, Any]]) -> List[Dict[str, Any]]:
    records = []
    for i, f in enumerate(polys, start=1):
        records.append(inspect(f))
        if i % PROGRESS_INTERVAL == 0:
            percent = int(i * 100 / total) if total else 0
            _log_progress(percent, f"{i} 件を処理しました")
    return records


def cmd_sample(config: CliConfig) -> int:
    """
    乱択 (または全列挙) した多項式について無平方の割合・規則ごとの成立率・オラクルとの不一致を出力

    Returns:
        不一致があれば 1
    """
    if config.sample_degree < 0 or config.sample_arity < 1:
        raise ConfigError("--degree は 0 以上、--arity は 1 以上です")
    if not config.field_text:
        raise ConfigError("--field を指定してください")
    field = parse_field_spec(config.field_text)

    checkers = CheckerFactory.all_checkers()
    checker_rules = [checker.get_rule() for checker in checkers]

    def inspect(f: Polynomial) -> Dict[str, Any]:
        verdict = analyze(f)
        outcome = check_soundness(f, verdict, config.oracle_budget)
        hypotheses = None if f.is_constant else compute_hypotheses(f)
        record = {
            'input': format_polynomial(f),
            'verdict': verdict.kind,
            'rule': verdict.rule,
            'squarefree': is_squarefree(f).squarefree,
            'leading_squarefree': hypotheses.leading_squarefree if hypotheses else True,
            'oracle': outcome.status,
            'detail': outcome.detail,
        }
        # 成分の個数別の判定器は主判定とは別に成立を数える
        for checker in checkers:
            record[checker.get_rule()] = hypotheses is not None and checker.check(f, hypotheses) is not None
        return record

    records = _sweep(_sample_polys(config, field), config.sample_count, inspect)
    df = pd.DataFrame(records, columns=['input', 'verdict', 'rule', 'squarefree',
                                        'leading_squarefree', 'oracle', 'detail'] + checker_rules)

    violations = df[df['oracle'] == 'violation']
    summary = {
        'field': str(field),
        'arity': config.sample_arity,
        'degree': config.sample_degree,
        'count': len(df),
        'mode': 'exhaustive' if config.sample_count is None else 'random',
        'seed': None if config.sample_count is None else config.seed,
        'squarefree_fraction': _rate(df['squarefree']),
        'leading_squarefree_fraction': _rate(df['leading_squarefree']),
        'rule_rates': {rule: round(float(rate), 6)
                       for rule, rate in df['rule'].value_counts(normalize=True).sort_index().items()},
        'checker_rates': {rule: _rate(df[rule]) for rule in checker_rules},
        'oracle': {status: int(n) for status, n in df['oracle'].value_counts().sort_index().items()},
        'violations': len(violations),
        'violation_details': sorted(violations['detail'].tolist()),
    }
    _emit_summary(summary, config)
    _write_xlsx(config, 'sample', records)
    return EXIT_VIOLATION if len(violations) else EXIT_OK


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------

def cmd_selftest(config: CliConfig) -> int:
    """
    GF(2) 二変数で全次数 max_degree 以下の全多項式を判定し、オラクルと照合する

    Returns:
        健全性・包含関係・無平方判定のどれかに違反があれば 1
    """
    if config.max_degree < 1:
        raise ConfigError(f"--max-degree は 1 以上です: {config.max_degree}")
    field = field_build(2)
    total = 2 ** ((config.max_degree + 1) * (config.max_degree + 2) // 2) - 1

    def inspect(f: Polynomial) -> Dict[str, Any]:
        verdict = analyze(f)
        outcome = check_soundness(f, verdict, config.oracle_budget, config.near_misses)
        problems = [outcome.detail] if outcome.status == 'violation' else []
        subsumed = subsumption_violation(f, verdict)
        if subsumed:
            problems.append(subsumed)
        if total_degree(f) <= SQUAREFREE_CHECK_MAX_DEGREE:
            disagreement = squarefree_disagreement(f, config.oracle_budget)
            if disagreement:
                problems.append(disagreement)
        return {
            'input': format_polynomial(f),
            'verdict': verdict.kind,
            'rule': verdict.rule,
            'oracle': outcome.status,
            'near_miss': outcome.detail if outcome.status == 'near_miss' else '',
            'problems': problems,
        }

    polys = iter_polynomials(field, 2, config.max_degree, config.oracle_budget)
    records = _sweep(polys, total, inspect)
    df = pd.DataFrame(records, columns=['input', 'verdict', 'rule', 'oracle', 'near_miss', 'problems'])

    problems = sorted(p for ps in df['problems'] for p in ps)
    summary = {
        'field': str(field),
        'max_degree': config.max_degree,
        'count': len(df),
        'rules': {rule: int(n) for rule, n in df['rule'].value_counts().sort_index().items()},
        'oracle': {status: int(n) for status, n in df['oracle'].value_counts().sort_index().items()},
        'violations': len(problems),
        'violation_details': problems,
    }
    if config.near_misses:
        summary['near_misses'] = sorted(d for d in df['near_miss'] if d)
    _emit_summary(summary, config)
    _write_xlsx(config, 'selftest', records)
    return EXIT_VIOLATION if problems else EXIT_OK


def _emit_summary(summary: Dict[str, Any], config: CliConfig):
    if config.output_mode == 'json':
        _emit(json.dumps(summary, sort_keys=True, ensure_ascii=False))
        return
    for key, value in summary.items():
        if isinstance(value, dict):
            _emit(f"{key}:")
            for k, v in value.items():
                _emit(f"  {k}: {_format_value(v)}")
        elif isinstance(value, list) and key.endswith(('details', 'misses')):
            _emit(f"{key}: {len(value)}")
            for item in value:
                _emit(f"  {item}")
        else:
            _emit(f"{key}: {_format_value(value)}")


def _write_xlsx(config: CliConfig, title: str, records: List[Dict[str, Any]]):
    if config.xlsx_dir is None:
        return
    columns = list(records[0].keys()) if records else ['input']
    path = CertificateExcelWriter(config.xlsx_dir, title).write_records(records, columns)
    logger.info("xlsx を出力しました: %s", path)


# ---------------------------------------------------------------------------
# ディスパッチ
# ---------------------------------------------------------------------------

def run(command: str, config: CliConfig, span_target: Optional[int] = None,
        span_generators: Optional[List[int]] = None) -> int:
    """
    サブコマンドを実行して終了コードを返す (ライブラリの例外はここで終了コードに変換)
    """
    try:
        if command == 'check':
            return cmd_check(config)
        elif command == 'decompose':
            return cmd_decompose(config)
        elif command == 'span':
            return cmd_span(config, span_target, span_generators or [])
        elif command == 'oracle':
            return cmd_oracle(config)
        elif command == 'sample':
            return cmd_sample(config)
        elif command == 'selftest':
            return cmd_selftest(config)
        else:
            raise ConfigError(f"未知のコマンド: {command}")
    except AbsIrrError as e:
        logger.debug("%s で失敗: %s", command, e)
        if config.output_mode == 'json':
            _emit(json.dumps(error_record(e), sort_keys=True, ensure_ascii=False))
        else:
            _report_error(e)
        return exit_code_for(e)


def _report_error(error: AbsIrrError):
    print(f"error: {error}", file=sys.stderr)
