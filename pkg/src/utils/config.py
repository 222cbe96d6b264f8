"""
Config
CLI の設定値と環境変数の解決
"""
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional

from core.errors import ConfigError
from utils.constants import DEFAULT_SEED, ENV_ORACLE_BUDGET, ORACLE_BUDGET, SELFTEST_MAX_DEGREE


@dataclass
class CliConfig:
    """コマンドライン設定"""
    field_text: Optional[str] = None
    poly_text: Optional[str] = None
    input_path: Optional[Path] = None
    arity: Optional[int] = None  # None = 使われている最大の変数番号
    output_mode: Literal['text', 'json'] = 'text'
    oracle_budget: int = ORACLE_BUDGET
    sample_count: Optional[int] = None  # None = 全列挙
    sample_degree: int = 3
    sample_arity: int = 2
    seed: int = DEFAULT_SEED
    max_degree: int = SELFTEST_MAX_DEGREE
    near_misses: bool = False
    xlsx_dir: Optional[Path] = None


def resolve_oracle_budget(flag_value: Optional[int] = None) -> int:
    """
    オラクル予算を決定 (引数 > 環境変数 > 既定値)

    Args:
        flag_value: --budget で指定された値

    Returns:
        候補数の上限

    Raises:
        ConfigError: 値が正の整数でない場合
    """
    if flag_value is not None:
        if flag_value <= 0:
            raise ConfigError(f"--budget は正の整数で指定してください: {flag_value}")
        return flag_value

    raw = os.environ.get(ENV_ORACLE_BUDGET)
    if raw is None or raw.strip() == '':
        return ORACLE_BUDGET

    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{ENV_ORACLE_BUDGET} が整数ではありません: {raw!r}") from None
    if value <= 0:
        raise ConfigError(f"{ENV_ORACLE_BUDGET} は正の整数で指定してください: {value}")
    return value
