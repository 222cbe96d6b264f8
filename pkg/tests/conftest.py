"""
共通フィクスチャ
src をパスに追加し、体と多項式の生成を共有する
"""
import sys
from pathlib import Path

import pytest

# プロジェクトルートを sys.path に追加
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / 'src'))

from core.finite_field import field_build  # noqa: E402
from core.polynomial_parser import parse_polynomial  # noqa: E402


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='全列挙の重いテストも実行する')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: 全列挙・大量乱択のテスト (--runslow で実行)')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='--runslow を指定すると実行')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def gf2():
    return field_build(2)


@pytest.fixture
def gf3():
    return field_build(3)


@pytest.fixture
def gf4():
    return field_build(2, 2)


@pytest.fixture
def gf5():
    return field_build(5)


@pytest.fixture
def poly():
    """テキストから多項式を作る (poly("x^2+y", gf2, arity=2))"""
    def make(text, field, arity=None):
        return parse_polynomial(text, field, arity)
    return make
