"""
精确有理数单纯形法（字典形式，Bland 规则）

只处理 max c·x, s.t. Ax ≤ b, x ≥ 0 且 b ≥ 0 的情形：
松弛变量构成的初始基可行，不需要第一阶段。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

logger = logging.getLogger(__name__)

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'


@dataclass(frozen=True)
class SimplexResult:
    status: str
    value: Fraction
    x: List[Fraction]
    pivots: int


class SimplexTableau:
    """
    字典形式：x_B[i] + Σ_j A[i][j]·x_N[j] = b[i]，z = z0 + Σ_j c[j]·x_N[j]
    变量编号 0..cols-1 为原变量，cols.. 为松弛变量
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence, c: Sequence):
        self.rows = len(A)
        self.cols = len(c)
        self.A = [[Fraction(v) for v in row] for row in A]
        self.b = [Fraction(v) for v in b]
        self.c = [Fraction(v) for v in c]
        self.z = Fraction(0)
        if any(v < 0 for v in self.b):
            raise ValueError('右端项必须非负，松弛基才可行')
        self.nb_vars = list(range(self.cols))
        self.b_vars = list(range(self.cols, self.cols + self.rows))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        row = self.A[i]
        for col in range(self.cols):
            self.c[col] -= delta * row[col]
        self.c[j] = -delta
        self.z += delta * self.b[i]

        for col in range(self.cols):
            row[col] = 1 / piv if col == j else row[col] / piv
        self.b[i] /= piv

        for k in range(self.rows):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            other = self.A[k]
            for col in range(self.cols):
                other[col] = -f / piv if col == j else other[col] - f * row[col]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> str:
        candidates = [(self.nb_vars[j], j) for j in range(self.cols) if self.c[j] > 0]
        if not candidates:
            return OPTIMAL
        _, j = min(candidates)
        ratios = [(self.b[i] / self.A[i][j], self.b_vars[i], i)
                  for i in range(self.rows) if self.A[i][j] > 0]
        if not ratios:
            return UNBOUNDED
        _, _, i = min(ratios)
        self.pivot(i, j)
        return 'go_on'

    def solve(self) -> SimplexResult:
        while True:
            status = self.bland_step()
            if status in (OPTIMAL, UNBOUNDED):
                break
        x = [Fraction(0)] * self.cols
        for i, var in enumerate(self.b_vars):
            if var < self.cols:
                x[var] = self.b[i]
        logger.debug(f'单纯形结束: status={status}, pivots={self.pivots}, z={self.z}')
        return SimplexResult(status=status, value=self.z, x=x, pivots=self.pivots)


def maximize(A: Sequence[Sequence], b: Sequence, c: Sequence) -> SimplexResult:
    return SimplexTableau(A, b, c).solve()
