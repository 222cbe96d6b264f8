"""
Polynomial Parser
体指定と多項式のテキスト文法、および正準形式への整形

体指定:   GF(p) | GF(p^n) | GF(p^n; c0,c1,...,cn)
多項式:   項を + / - でつなぐ。項は係数・生成元 a・変数のべきの積 (* または並置)
          変数は x, y, z, w (x1..x4 の別名) または x1..x9
          括弧の中には係数 (整数と a) だけを書ける
"""
from typing import Dict, List, Optional, Tuple

from core.errors import InvalidFieldError, ParseError
from core.finite_field import (
    MAX_CHARACTERISTIC,
    FieldElement,
    FieldSpec,
    field_build,
    is_irreducible_modulus,
    is_prime,
)
from core.polynomial import MAX_EXPONENT, Monomial, Polynomial
from utils.constants import GENERATOR_SYMBOL, MAX_ARITY, MAX_INTEGER_DIGITS, VARIABLE_ALIASES

_WHITESPACE = ' \t\r\n'
_DIGITS = '0123456789'


class _Cursor:
    """入力位置を持つ走査器"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in _WHITESPACE:
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def at_end(self) -> bool:
        return self.peek() == ''

    def byte_offset(self, pos: Optional[int] = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode('utf-8'))

    def error(self, message: str, expected: Optional[str] = None,
              code: str = 'syntax', pos: Optional[int] = None) -> ParseError:
        return ParseError(self.byte_offset(pos), message, expected, code)

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            found = self.peek() or 'end of input'
            raise self.error(f"'{token}' が必要です ('{found}' があります)", f"'{token}'")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self, what: str = 'integer') -> Tuple[int, int]:
        """10 進整数 (値, 開始位置)"""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else 'end of input'
            raise self.error(f"{what} が必要です ('{found}' があります)", what, pos=start)
        try:
            if self.pos - start > MAX_INTEGER_DIGITS:
                raise ValueError(self.pos - start)
            return int(self.text[start:self.pos]), start
        except ValueError:
            raise self.error(f"{what} が大きすぎます ({self.pos - start} 桁)", what,
                             code='number_too_large', pos=start) from None


# ---------------------------------------------------------------------------
# 体指定
# ---------------------------------------------------------------------------

def parse_field_spec(text: str) -> FieldSpec:
    """
    体指定のテキストを FieldSpec に変換

    Args:
        text: "GF(2)", "GF(2^2)", "GF(3^2; 1,0,1)" など

    Returns:
        FieldSpec

    Raises:
        ParseError: 構文エラー (code='syntax')、素数でない標数 ('non_prime')、
                    法多項式の形が不正 ('bad_modulus')、可約な法多項式 ('reducible_modulus')
    """
    cur = _Cursor(text)
    cur.expect('GF')
    cur.expect('(')
    p, p_pos = cur.integer('characteristic')
    if not 2 <= p <= MAX_CHARACTERISTIC or not is_prime(p):
        hint = "prime characteristic (write extensions as GF(p^n))"
        raise cur.error(f"標数 {p} は {MAX_CHARACTERISTIC} 以下の素数ではありません", hint,
                        code='non_prime', pos=p_pos)

    n = 1
    modulus: Optional[List[int]] = None
    modulus_pos = None
    if cur.accept('^'):
        n, n_pos = cur.integer('extension degree')
        if n < 1:
            raise cur.error("拡大次数は 1 以上です", 'positive integer', code='bad_modulus', pos=n_pos)
        if cur.accept(';'):
            cur.skip_ws()
            modulus_pos = cur.pos
            first, _ = cur.integer('modulus coefficient')
            modulus = [first]
            while cur.accept(','):
                value, _ = cur.integer('modulus coefficient')
                modulus.append(value)
    cur.expect(')')
    if not cur.at_end():
        raise cur.error("体指定の後に余分な文字があります", 'end of input')

    if modulus is None:
        return field_build(p, n)

    if len(modulus) != n + 1 or modulus[-1] != 1 or any(c >= p for c in modulus):
        raise cur.error(f"法多項式は {n + 1} 個の係数 (0..{p - 1}、最高次は 1) で指定してください",
                        f"{n + 1} residues ending with 1", code='bad_modulus', pos=modulus_pos)
    if n > 1 and not is_irreducible_modulus(modulus, p):
        raise cur.error(f"法多項式 {modulus} は GF({p}) 上で可約です", 'irreducible modulus',
                        code='reducible_modulus', pos=modulus_pos)
    try:
        return FieldSpec(p, n, tuple(modulus) if n > 1 else field_build(p, 1).modulus)
    except InvalidFieldError as e:
        raise cur.error(str(e), code='bad_modulus', pos=modulus_pos) from None


def format_field_spec(spec: FieldSpec) -> str:
    return str(spec)


# ---------------------------------------------------------------------------
# 多項式
# ---------------------------------------------------------------------------

class _PolynomialParser:
    """多項式テキストの再帰下降パーサ"""

    def __init__(self, text: str, field: FieldSpec):
        self.cur = _Cursor(text)
        self.field = field
        self.terms: Dict[Monomial, FieldElement] = {}
        self.max_index = -1

    def parse(self) -> Dict[Tuple[int, ...], FieldElement]:
        cur = self.cur
        if cur.at_end():
            raise cur.error("多項式が空です", 'term')
        sign = 1
        if cur.accept('-'):
            sign = -1
        else:
            cur.accept('+')
        self._add_term(sign)
        while not cur.at_end():
            if cur.accept('+'):
                sign = 1
            elif cur.accept('-'):
                sign = -1
            else:
                raise cur.error(f"'{cur.peek()}' は使えません", "'+', '-' or end of input")
            self._add_term(sign)
        return self.terms

    def _add_term(self, sign: int):
        coeff, exponents = self._term()
        if sign < 0:
            coeff = -coeff
        key = tuple(exponents.get(i, 0) for i in range(MAX_ARITY))
        total = self.terms.get(key, self.field.zero()) + coeff
        self.terms[key] = total

    def _exponent(self) -> int:
        if not self.cur.accept('^'):
            return 1
        value, pos = self.cur.integer('exponent')
        if value > MAX_EXPONENT:
            raise self.cur.error(f"指数 {value} が大きすぎます", 'exponent below 2^32', pos=pos)
        return value

    def _generator(self, pos: int) -> FieldElement:
        if self.field.is_prime_field:
            raise self.cur.error(f"素体 {self.field} では生成元 '{GENERATOR_SYMBOL}' は使えません",
                                 'integer coefficient', code='generator_over_prime_field', pos=pos)
        return self.field.generator()

    def _variable(self) -> int:
        cur = self.cur
        start = cur.pos
        letter = cur.text[cur.pos]
        cur.pos += 1
        if letter == 'x' and cur.pos < len(cur.text) and cur.text[cur.pos] in _DIGITS:
            digits_start = cur.pos
            while cur.pos < len(cur.text) and cur.text[cur.pos] in _DIGITS:
                cur.pos += 1
            digits = cur.text[digits_start:cur.pos]
            significant = digits.lstrip('0')
            index = int(significant) if len(significant) == 1 else 0
            if not 1 <= index <= MAX_ARITY:
                raise cur.error(f"変数 x{digits} は使えません (x1..x{MAX_ARITY})", f"x1..x{MAX_ARITY}",
                                code='unknown_variable', pos=start)
            return index - 1
        return VARIABLE_ALIASES.index(letter)

    def _term(self) -> Tuple[FieldElement, Dict[int, int]]:
        cur = self.cur
        coeff = self.field.one()
        exponents: Dict[int, int] = {}
        count = 0
        while True:
            ch = cur.peek()
            pos = cur.pos
            if ch and ch in _DIGITS:
                value, _ = cur.integer()
                coeff = coeff * self.field.element(value)
            elif ch == GENERATOR_SYMBOL:
                cur.pos += 1
                coeff = coeff * (self._generator(pos) ** self._exponent())
            elif ch and ch in VARIABLE_ALIASES:
                index = self._variable()
                exponents[index] = exponents.get(index, 0) + self._exponent()
                if exponents[index] > MAX_EXPONENT:
                    raise cur.error("指数が大きすぎます", 'exponent below 2^32', pos=pos)
                self.max_index = max(self.max_index, index)
            elif ch == '(':
                cur.pos += 1
                value = self._coefficient_expression()
                cur.expect(')')
                coeff = coeff * (value ** self._exponent())
            elif ch.isalpha():
                raise cur.error(f"未知の記号 '{ch}' です", "x, y, z, w or x1..x9",
                                code='unknown_variable', pos=pos)
            else:
                if count == 0:
                    found = ch or 'end of input'
                    raise cur.error(f"項が必要です ('{found}' があります)", 'term', pos=pos)
                return coeff, exponents
            count += 1
            if cur.accept('*'):
                ch = cur.peek()
                if not ch or not (ch in _DIGITS or ch == '(' or ch.isalpha()):
                    raise cur.error("'*' の後に因子が必要です", 'factor')

    def _coefficient_expression(self) -> FieldElement:
        # 括弧内: 整数と a だけからなる和
        cur = self.cur
        total = self.field.zero()
        sign = -1 if cur.accept('-') else 1
        if sign > 0:
            cur.accept('+')
        while True:
            value = self.field.one()
            count = 0
            while True:
                ch = cur.peek()
                pos = cur.pos
                if ch and ch in _DIGITS:
                    number, _ = cur.integer()
                    value = value * self.field.element(number)
                elif ch == GENERATOR_SYMBOL:
                    cur.pos += 1
                    value = value * (self._generator(pos) ** self._exponent())
                elif ch and (ch in VARIABLE_ALIASES or ch.isalpha() or ch == '('):
                    raise cur.error("括弧の中には係数だけを書けます", 'coefficient', pos=pos)
                else:
                    if count == 0:
                        found = ch or 'end of input'
                        raise cur.error(f"係数が必要です ('{found}' があります)", 'coefficient', pos=pos)
                    break
                count += 1
                if cur.accept('*') and not (cur.peek() and cur.peek() in _DIGITS + GENERATOR_SYMBOL):
                    raise cur.error("'*' の後に係数が必要です", 'coefficient')
            total = total + (value if sign > 0 else -value)
            if cur.accept('+'):
                sign = 1
            elif cur.accept('-'):
                sign = -1
            else:
                return total


def parse_polynomial(text: str, field: FieldSpec, arity: Optional[int] = None) -> Polynomial:
    """
    多項式テキストを Polynomial に変換

    Args:
        text: "x^2 + x*y + y^2 + x" など
        field: 係数体
        arity: 変数の個数。省略時は使われている最大の変数番号

    Returns:
        同類項をまとめた Polynomial

    Raises:
        ParseError: 構文エラー、未知の変数 ('unknown_variable')、素体での a ('generator_over_prime_field')、
                    arity を超える変数 ('arity')
    """
    parser = _PolynomialParser(text, field)
    raw = parser.parse()
    used = parser.max_index + 1
    if arity is None:
        arity = max(used, 1)
    elif not 1 <= arity <= MAX_ARITY:
        raise ParseError(0, f"変数の個数 {arity} は 1..{MAX_ARITY} の範囲です", code='arity')
    elif used > arity:
        raise ParseError(0, f"変数 x{used} は変数の個数 {arity} を超えています",
                         f"at most {arity} variables", code='arity')
    return Polynomial(field, arity, {m[:arity]: c for m, c in raw.items()})


def _variable_name(index: int, arity: int) -> str:
    if arity <= len(VARIABLE_ALIASES):
        return VARIABLE_ALIASES[index]
    return f"x{index + 1}"


def format_element(c: FieldElement) -> str:
    """係数の表記 (拡大体の複合係数は括弧でくくる)"""
    text = str(c)
    return f"({text})" if '+' in text else text


def format_polynomial(f: Polynomial) -> str:
    """
    正準形式の文字列 (grevlex 降順、係数 1 と指数 1 は省略、零多項式は "0")
    """
    if f.is_zero:
        return '0'
    parts = []
    for monomial, coeff in f.items():
        variables = ''.join(
            _variable_name(i, f.arity) + (f"^{e}" if e > 1 else '')
            for i, e in enumerate(monomial) if e
        )
        if not variables:
            parts.append(format_element(coeff))
        elif coeff.is_one:
            parts.append(variables)
        else:
            parts.append(format_element(coeff) + variables)
    return ' + '.join(parts)
