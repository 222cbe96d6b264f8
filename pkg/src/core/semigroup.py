"""
Semigroup
数値半群 span_N{g_1, ..., g_k} への所属判定とギャップの列挙
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class GeneratorSet:
    """
    生成元の集合 (狭義単調増加する正の整数、空でもよい)

    空集合は {0} だけを生成する。
    """
    generators: Tuple[int, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if any(not isinstance(g, int) or g < 1 for g in gens):
            raise ValueError(f"生成元は正の整数です: {gens}")
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise ValueError(f"生成元は狭義単調増加で並べてください: {gens}")
        object.__setattr__(self, 'generators', gens)

    @classmethod
    def of(cls, values: Iterable[int]) -> 'GeneratorSet':
        """並べ替えて重複を除いてから作る"""
        return cls(tuple(sorted(set(values))))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self) -> str:
        return '{' + ','.join(str(g) for g in self.generators) + '}'


def _reachable(limit: int, gens: GeneratorSet) -> List[bool]:
    # reachable[t] = t が生成元の非負整数結合で書ける
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for g in gens:
        for t in range(g, limit + 1):
            if reachable[t - g]:
                reachable[t] = True
    return reachable


def span_membership(target: int, gens: GeneratorSet) -> bool:
    """
    target が span_N(gens) に属するか

    Args:
        target: 0 以上の整数
        gens: 生成元

    Returns:
        target = Σ c_i·g_i (c_i >= 0) と書けるなら True
    """
    if target < 0:
        raise ValueError(f"target は 0 以上です: {target}")
    return _reachable(target, gens)[target]


def gaps_below(bound: int, gens: GeneratorSet) -> List[int]:
    """
    0 < t < bound で span に属さない t (昇順)
    """
    if bound < 1:
        raise ValueError(f"bound は 1 以上です: {bound}")
    reachable = _reachable(bound - 1, gens)
    return [t for t in range(1, bound) if not reachable[t]]
