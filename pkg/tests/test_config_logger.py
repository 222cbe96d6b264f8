"""
設定とロガーのテスト
"""
import logging

import pytest

from core.errors import ConfigError
from utils.config import resolve_oracle_budget
from utils.constants import ENV_ORACLE_BUDGET, ORACLE_BUDGET
from utils.logger import configure_logging, get_logger


def test_budget_default(monkeypatch):
    monkeypatch.delenv(ENV_ORACLE_BUDGET, raising=False)
    assert resolve_oracle_budget() == ORACLE_BUDGET


def test_budget_env_and_flag(monkeypatch):
    monkeypatch.setenv(ENV_ORACLE_BUDGET, ' 5000 ')
    assert resolve_oracle_budget() == 5000
    assert resolve_oracle_budget(12) == 12


@pytest.mark.parametrize('raw', ['abc', '0', '-3', '1.5'])
def test_budget_env_invalid(monkeypatch, raw):
    monkeypatch.setenv(ENV_ORACLE_BUDGET, raw)
    with pytest.raises(ConfigError):
        resolve_oracle_budget()


def test_budget_flag_invalid():
    with pytest.raises(ConfigError):
        resolve_oracle_budget(0)


def test_logger_names():
    assert get_logger('core.gcd').name == 'absirr.core.gcd'
    assert get_logger('absirr.cli').name == 'absirr.cli'


def test_configure_logging_is_idempotent():
    root = configure_logging('DEBUG')
    configure_logging('INFO')
    assert len(root.handlers) == 1
    assert root.level == logging.INFO
    configure_logging('WARNING')
