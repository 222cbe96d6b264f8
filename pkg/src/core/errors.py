"""
Errors
ライブラリ全体で使う例外クラス
"""
from typing import Optional


class AbsIrrError(ValueError):
    """すべての例外の基底クラス"""


class InvalidFieldError(AbsIrrError):
    """体の指定が不正 (素数でない標数、可約な法多項式など)"""


class FieldMismatchError(AbsIrrError):
    """異なる体の元どうしを演算しようとした"""


class FieldDivisionByZeroError(AbsIrrError, ZeroDivisionError):
    """0 の逆元を求めようとした"""


class EmbeddingError(AbsIrrError):
    """拡大次数が割り切れないなど、埋め込みが存在しない"""


class ArityMismatchError(AbsIrrError):
    """変数の個数が一致しない、または変数番号が範囲外"""


class DegenerateInputError(AbsIrrError):
    """零多項式・定数など、処理の前提を満たさない入力"""


class NotAPthPowerError(AbsIrrError):
    """p 乗根を取れない多項式"""


class ScopeError(AbsIrrError):
    """列挙の予算を超えた (誤った答えは返さない)"""


class ConfigError(AbsIrrError):
    """設定値 (環境変数・引数) が不正"""


class ParseError(AbsIrrError):
    """
    体指定・多項式テキストの構文エラー

    Attributes:
        offset: 問題のあるバイト位置 (入力長 + 1 以内)
        message: エラーメッセージ
        expected: 期待されていたトークンのヒント
        code: エラーコード ('syntax', 'non_prime', 'reducible_modulus' など)
    """

    def __init__(self, offset: int, message: str, expected: Optional[str] = None,
                 code: str = 'syntax'):
        self.offset = offset
        self.message = message
        self.expected = expected
        self.code = code
        detail = f"{message} (offset {offset})"
        if expected:
            detail += f", expected {expected}"
        super().__init__(detail)


class InexactDivisionError(AbsIrrError):
    """割り切れることを前提とした除算で余りが出た"""
