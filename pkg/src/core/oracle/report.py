"""
Oracle Report
総当たりによる検証結果
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.finite_field import FieldSpec
from core.polynomial import Polynomial
from core.polynomial_parser import format_polynomial


@dataclass(frozen=True)
class AbsoluteFactorCount:
    """
    代数閉包上の因子の個数 (重複度込み)

    Attributes:
        count: 因子の個数
        factor_degrees: 各因子の次数 (昇順)
        base_factorization: 基礎体上の既約分解 (因子, 重複度)
        factors: 共通の拡大体上の因子の列 (体が列挙予算を超えるときは None)
        witness_field: factors の係数体
        splitting_degrees: 基礎体上の各既約因子が分かれる個数 r
    """
    count: int
    factor_degrees: Tuple[int, ...]
    base_factorization: Tuple[Tuple[Polynomial, int], ...]
    factors: Optional[Tuple[Polynomial, ...]] = None
    witness_field: Optional[FieldSpec] = None
    splitting_degrees: Tuple[int, ...] = ()


@dataclass(frozen=True)
class OracleReport:
    """
    絶対既約性の総当たり判定の結果

    Attributes:
        base_field: 基礎体 GF(q)
        tested_extensions: k = 1..deg(f)
        irreducible_over: k -> GF(q^k) 上で既約か
        max_factor_count: 代数閉包上の因子の個数 (どの拡大体でもこれより多くは分かれない)
        sample_factorization: その個数に分かれる分解 (拡大体上)
        witness_field: sample_factorization の係数体
        factor_degrees: 各因子の次数
    """
    base_field: FieldSpec
    tested_extensions: Tuple[int, ...]
    irreducible_over: Dict[int, bool]
    max_factor_count: int
    sample_factorization: Optional[Tuple[Polynomial, ...]] = None
    witness_field: Optional[FieldSpec] = None
    factor_degrees: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def absolutely_irreducible(self) -> bool:
        return all(self.irreducible_over.values())

    def to_dict(self) -> Dict[str, Any]:
        """JSON 出力用の辞書"""
        data: Dict[str, Any] = {
            'base_field': str(self.base_field),
            'tested_extensions': list(self.tested_extensions),
            'irreducible_over': {str(k): v for k, v in sorted(self.irreducible_over.items())},
            'absolutely_irreducible': self.absolutely_irreducible,
            'max_factor_count': self.max_factor_count,
            'factor_degrees': list(self.factor_degrees),
        }
        if self.sample_factorization is not None:
            data['sample_factorization'] = [format_polynomial(g) for g in self.sample_factorization]
            data['witness_field'] = str(self.witness_field)
        return data
