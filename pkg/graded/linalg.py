"""GF(2) 上的线性代数，行向量用 int 位图表示"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional


class EchelonBasis:
    """
    以每行最高位为主元保存的行空间
    reduce() 返回陪集的规范代表元：不含任何主元位
    """

    def __init__(self, rows: Iterable[int] = ()):
        self.rows: Dict[int, int] = {}
        for row in rows:
            self.add(row)

    def reduce(self, vec: int) -> int:
        for pivot in sorted(self.rows, reverse=True):
            if vec >> pivot & 1:
                vec ^= self.rows[pivot]
        return vec

    def add(self, vec: int) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        self.rows[vec.bit_length() - 1] = vec
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def contains(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    def reduced(self) -> Dict[int, int]:
        """简化行阶梯形：主元列只在本行非零"""
        rows = dict(self.rows)
        for p in sorted(rows):
            for q in rows:
                if q != p and rows[q] >> p & 1:
                    rows[q] ^= rows[p]
        return rows


def gf2_rank(rows: Iterable[int]) -> int:
    return EchelonBasis(rows).rank


@dataclass(frozen=True)
class Solution:
    particular: int
    nullspace: List[int]

    @property
    def nullity(self) -> int:
        return len(self.nullspace)

    @property
    def count(self) -> int:
        return 1 << self.nullity


def solve(equations: Iterable[int], unknowns: int) -> Optional[Solution]:
    """
    解 GF(2) 线性方程组：每个方程第 0 位为右端项，第 j+1 位为未知量 j 的系数
    无解返回 None；解以未知量位图表示（第 j 位 = 未知量 j）
    """
    basis = EchelonBasis(equations)
    if 0 in basis.rows:
        return None
    rows = basis.reduced()
    pivot_vars = {p - 1 for p in rows}
    particular = 0
    for p, row in rows.items():
        if row & 1:
            particular |= 1 << (p - 1)
    nullspace = []
    for free in range(unknowns):
        if free in pivot_vars:
            continue
        vec = 1 << free
        for p, row in rows.items():
            if row >> (free + 1) & 1:
                vec |= 1 << (p - 1)
        nullspace.append(vec)
    return Solution(particular=particular, nullspace=nullspace)
