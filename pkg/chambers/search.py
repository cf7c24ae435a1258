"""
房室候选的深度优先搜索

按数值（余字典）顺序逐个决定 {1..n-1} 的子集 x 是否属于 S¹（x∪{n} 为短集）。
数值顺序是包含序与支配序的线性扩张，所以决定 x 时它的全部前驱都已确定。
x 可以加入当且仅当：
  * 所有直接前驱都已加入；
  * 对族中任意 A、B（含 A = B），|[n-1]∖(A∪B)| ≥ 2。
    （A∪{n}、B∪{n} 都短时 Σ_{A∩B} + l_n < Σ_{[n-1]∖(A∪B)}，而 l_n 最大。）
排除总是允许的，因此每个叶子都是一个完整候选。

本模块不依赖 Django 配置，可在工作进程中直接导入。
"""
import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from core.subsets import predecessors

from .realizability import ChamberSignature, lp_realizable, solve_margin, successors

logger = logging.getLogger(__name__)

INCLUDE = '1'
EXCLUDE = '0'


class CandidateSearch:
    """支配偏序下集上的深度优先搜索，叶子即完整候选签名"""

    def __init__(self, n: int, partial_lp: bool = False):
        self.n = n
        self.m = n - 1
        self.size = 1 << self.m
        self.limit = self.m - 2
        self.partial_lp = partial_lp
        self.member = bytearray(self.size)
        self.family: List[int] = []
        self.longs: List[int] = []
        self.leaves = 0
        self.lp_calls = 0
        self.pruned = 0

    def can_include(self, x: int) -> bool:
        if x.bit_count() > self.limit:
            return False
        member = self.member
        for p in predecessors(x, self.m):
            if not member[p]:
                return False
        limit = self.limit
        for y in self.family:
            if (x | y).bit_count() > limit:
                return False
        return True

    def next_open(self, x: int) -> int:
        while x < self.size and not self.can_include(x):
            x += 1
        return x

    def _include(self, x: int) -> None:
        self.member[x] = 1
        self.family.append(x)

    def _undo_include(self, x: int) -> None:
        self.member[x] = 0
        self.family.pop()

    def _partial_feasible(self) -> bool:
        """部分候选的线性规划松弛：已定的极大短集与极小长集"""
        self.lp_calls += 1
        maximal = [x for x in self.family
                   if not any(self.member[s] for s in successors(x, self.m))]
        margin, _ = solve_margin(self.n, maximal, self.longs)
        if margin <= 0:
            self.pruned += 1
            return False
        return True

    def _descend(self, x: int, depth: Optional[int], path: str) -> Iterator[Tuple[str, Optional[ChamberSignature]]]:
        x = self.next_open(x)
        if x >= self.size:
            self.leaves += 1
            yield path, ChamberSignature(self.n, frozenset(self.family))
            return
        if depth is not None and len(path) >= depth:
            yield path, None
            return

        self._include(x)
        if not self.partial_lp or self._partial_feasible():
            yield from self._descend(x + 1, depth, path + INCLUDE)
        self._undo_include(x)

        # 可加入却被排除的 x 恰好是一个极小长集
        self.longs.append(x)
        if not self.partial_lp or self._partial_feasible():
            yield from self._descend(x + 1, depth, path + EXCLUDE)
        self.longs.pop()

    def split(self, depth: int) -> List[str]:
        """把搜索树在第 depth 个分支点处切开，返回各子树的决策前缀"""
        return [path for path, _ in self._descend(0, depth, '')]

    def candidates(self, prefix: str = '') -> Iterator[ChamberSignature]:
        """重放决策前缀后枚举该子树下的全部叶子"""
        x = 0
        for decision in prefix:
            x = self.next_open(x)
            if x >= self.size:
                raise ValueError(f'决策前缀 {prefix!r} 超出搜索树')
            if decision == INCLUDE:
                self._include(x)
            else:
                self.longs.append(x)
            x += 1
        for _, candidate in self._descend(x, None, prefix):
            yield candidate


def split_tasks(n: int, depth: int) -> List[str]:
    return CandidateSearch(n).split(depth)


@dataclass
class TaskResult:
    key: str
    chambers: List[Tuple[Tuple[int, ...], Tuple[int, ...], str]] = field(default_factory=list)
    leaves: int = 0
    lp_calls: int = 0
    pruned: int = 0


def run_task(job: Tuple[int, str, bool]) -> TaskResult:
    """
    工作进程入口：枚举一个子树并对每个叶子做精确线性规划
    返回纯 Python 元组以便跨进程传输
    """
    n, prefix, partial_lp = job
    search = CandidateSearch(n, partial_lp=partial_lp)
    result = TaskResult(key=prefix)
    for candidate in search.candidates(prefix):
        certificate = lp_realizable(candidate)
        result.lp_calls += 1
        if certificate.feasible:
            result.chambers.append((
                tuple(sorted(candidate.short_with_n)),
                tuple(int(v) for v in certificate.witness.entries),
                str(certificate.margin),
            ))
    result.leaves = search.leaves
    result.lp_calls += search.lp_calls
    result.pruned = search.pruned
    logger.debug(f'子树 {prefix or "<root>"} 完成: 叶子 {result.leaves}，房室 {len(result.chambers)}')
    return result
