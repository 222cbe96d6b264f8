"""
Arguments
コマンドライン引数の定義と CliConfig への変換
"""
import argparse
from pathlib import Path
from typing import List, Optional

from utils.config import CliConfig, resolve_oracle_budget
from utils.constants import DEFAULT_SEED, ENV_ORACLE_BUDGET, SELFTEST_MAX_DEGREE


def _count(text: str) -> Optional[int]:
    # 'all' は全列挙
    if text == 'all':
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"正の整数または all を指定してください: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"正の整数または all を指定してください: {text!r}")
    return value


def _generators(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"生成元はカンマ区切りの整数です: {text!r}") from None
    return values


def build_parser() -> argparse.ArgumentParser:
    """サブコマンド check / decompose / span / oracle / sample / selftest のパーサー"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='JSON で出力する')
    common.add_argument('--verbose', action='store_true', help='INFO ログを表示する')
    common.add_argument('--debug', action='store_true', help='DEBUG ログを表示する')
    common.add_argument('--budget', type=int, default=None,
                        help=f'オラクルの候補数の上限 (既定は {ENV_ORACLE_BUDGET} または 2^22)')

    poly_args = argparse.ArgumentParser(add_help=False)
    poly_args.add_argument('--field', help='係数体 (例: "GF(2)", "GF(3^2)", "GF(2^2; 1,1,1)")')
    poly_args.add_argument('--poly', help='多項式 (例: "x^2+xy+y^2+x")')
    poly_args.add_argument('--arity', type=int, default=None, help='変数の個数 (省略時は使われている変数から決める)')

    parser = argparse.ArgumentParser(
        prog='absirr',
        description='有限体上の多項式の絶対既約性を次数ギャップ条件で判定する',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    check = sub.add_parser('check', parents=[common, poly_args], help='絶対既約性を判定して証明書を出力')
    check.add_argument('--in', dest='input_path', type=Path, default=None,
                       help='1行に "field<TAB>poly" を並べたファイル (JSON-lines で出力)')
    check.add_argument('--xlsx', dest='xlsx_dir', type=Path, default=None, help='証明書を xlsx で出力するディレクトリ')

    sub.add_parser('decompose', parents=[common, poly_args], help='斉次分解・ギャップ列・仮説を表示')

    span = sub.add_parser('span', parents=[common], help='数値半群への所属判定')
    span.add_argument('target', type=int, help='判定する整数')
    span.add_argument('--gens', type=_generators, required=True, help='生成元 (例: 3,5)')

    sub.add_parser('oracle', parents=[common, poly_args], help='総当たりで絶対既約性を判定')

    sample = sub.add_parser('sample', parents=[common], help='乱択した多項式の統計')
    sample.add_argument('--field', required=True, help='係数体')
    sample.add_argument('--degree', type=int, default=3, help='全次数')
    sample.add_argument('--arity', type=int, default=2, help='変数の個数')
    sample.add_argument('--count', type=_count, default=1000,
                        help='件数 (all なら先頭係数 1 の多項式を全列挙)')
    sample.add_argument('--seed', type=int, default=DEFAULT_SEED, help='乱数のシード')
    sample.add_argument('--xlsx', dest='xlsx_dir', type=Path, default=None, help='結果を xlsx で出力するディレクトリ')

    selftest = sub.add_parser('selftest', parents=[common], help='GF(2) 二変数の全列挙でオラクルと照合')
    selftest.add_argument('--max-degree', type=int, default=SELFTEST_MAX_DEGREE, help='全次数の上限')
    selftest.add_argument('--near-misses', action='store_true', help='仮説不成立で可約だった入力も列挙する')
    selftest.add_argument('--xlsx', dest='xlsx_dir', type=Path, default=None, help='結果を xlsx で出力するディレクトリ')

    return parser


def log_level(args: argparse.Namespace) -> Optional[str]:
    """--debug > --verbose > 環境変数"""
    if args.debug:
        return 'DEBUG'
    if args.verbose:
        return 'INFO'
    return None


def build_config(args: argparse.Namespace) -> CliConfig:
    """
    引数から CliConfig を作る

    Raises:
        ConfigError: 予算の指定が不正な場合
    """
    config = CliConfig(
        output_mode='json' if args.json else 'text',
        oracle_budget=resolve_oracle_budget(args.budget),
    )
    config.field_text = getattr(args, 'field', None)
    config.poly_text = getattr(args, 'poly', None)
    config.input_path = getattr(args, 'input_path', None)
    config.xlsx_dir = getattr(args, 'xlsx_dir', None)
    if args.command == 'sample':
        config.sample_degree = args.degree
        config.sample_arity = args.arity
        config.sample_count = args.count
        config.seed = args.seed
    else:
        config.arity = getattr(args, 'arity', None)
    if args.command == 'selftest':
        config.max_degree = args.max_degree
        config.near_misses = args.near_misses
    return config
