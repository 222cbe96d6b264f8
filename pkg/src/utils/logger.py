"""
Logger
ロガーの初期化と取得
"""
import logging
import os
import sys
from typing import Optional

from utils.constants import ENV_LOG_LEVEL

ROOT_LOGGER_NAME = 'absirr'
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """
    ルートロガーにハンドラを設定する (何度呼んでも1つだけ)

    Args:
        level: ログレベル名。None なら環境変数、それもなければ WARNING

    Returns:
        設定済みのルートロガー
    """
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False

    level_name = (level or os.environ.get(ENV_LOG_LEVEL) or 'WARNING').upper()
    root.setLevel(getattr(logging, level_name, logging.WARNING))
    return root


def get_logger(name: str) -> logging.Logger:
    """
    モジュール用のロガーを取得

    Args:
        name: 通常は __name__

    Returns:
        'absirr.' 配下のロガー
    """
    if name.startswith(ROOT_LOGGER_NAME):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
