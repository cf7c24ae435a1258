"""
房室签名、可实现性证书与房室记录

候选签名 F = {J∖{n} : J 含 n 且为短集}。判断是否存在有序一般向量实现 F，
等价于线性规划 max t 的最优值 t* > 0：
    t ≤ l_1 ≤ l_2 ≤ … ≤ l_n，Σ l_i ≤ 1，
    极大短集 J：Σ_{J̄} l − Σ_J l ≥ t，极小长集 J：Σ_J l − Σ_{J̄} l ≥ t。
支配序下短集的前驱间隙不小于自身，因此只需极大短集与极小长集的约束。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import FrozenSet, Iterable, List, Optional, Tuple

from core.exceptions import InvariantViolation, PreconditionError
from core.lengths import LengthVector
from core.subsets import SignatureFamily, is_down_closed, predecessors, signature

from .simplex import UNBOUNDED, maximize

logger = logging.getLogger(__name__)


def successors(mask: int, m: int):
    """predecessors 的逆关系：加入一个元素，或把元素 j 换成 j+1"""
    for bit in range(m):
        b = 1 << bit
        if mask & b:
            if bit + 1 < m and not mask & (b << 1):
                yield mask ^ b ^ (b << 1)
        else:
            yield mask | b


@dataclass(frozen=True)
class ChamberSignature:
    n: int
    short_with_n: FrozenSet[int]

    @property
    def m(self) -> int:
        return self.n - 1

    @classmethod
    def from_family(cls, sig: SignatureFamily) -> 'ChamberSignature':
        return cls(n=sig.n, short_with_n=sig.short_with_n)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """签名的规范全序：先按族的大小，再按升序位图序列"""
        return len(self.short_with_n), tuple(sorted(self.short_with_n))

    def maximal_short(self) -> List[int]:
        return sorted(x for x in self.short_with_n
                      if not any(s in self.short_with_n for s in successors(x, self.m)))

    def minimal_long(self) -> List[int]:
        out = []
        for y in range(1 << self.m):
            if y in self.short_with_n:
                continue
            if all(p in self.short_with_n for p in predecessors(y, self.m)):
                out.append(y)
        return out


@dataclass(frozen=True)
class RealizabilityCertificate:
    feasible: bool
    witness: Optional[LengthVector]
    margin: Fraction


@dataclass(frozen=True)
class ChamberRecord:
    signature: ChamberSignature
    witness: LengthVector
    margin: Fraction
    normal: bool
    betti: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.signature.n


def _wall_row(n: int, subset: int, sign: int) -> List[int]:
    """J = subset ∪ {n} 的行：sign·(Σ_J l − Σ_{J̄} l) + t"""
    row = []
    for i in range(n - 1):
        row.append(sign if subset >> i & 1 else -sign)
    row.append(sign)
    row.append(1)
    return row


def solve_margin(n: int, short_sets: Iterable[int], long_sets: Iterable[int]) -> Tuple[Fraction, List[Fraction]]:
    """求 t 的最大值及对应的 l；t* > 0 当且仅当约束组严格可行"""
    A, b = [], []
    first = [0] * (n + 1)
    first[0], first[n] = -1, 1
    A.append(first)
    b.append(0)
    for i in range(n - 1):
        row = [0] * (n + 1)
        row[i], row[i + 1] = 1, -1
        A.append(row)
        b.append(0)
    for subset in short_sets:
        A.append(_wall_row(n, subset, 1))
        b.append(0)
    for subset in long_sets:
        A.append(_wall_row(n, subset, -1))
        b.append(0)
    A.append([1] * n + [0])
    b.append(1)
    c = [0] * n + [1]
    result = maximize(A, b, c)
    if result.status == UNBOUNDED:
        raise InvariantViolation('可实现性线性规划无界，约束构造有误')
    return result.value, result.x[:n]


def integer_witness(values: List[Fraction]) -> LengthVector:
    """同比例放大为互素的正整数向量"""
    common = lcm(*(v.denominator for v in values))
    ints = [int(v * common) for v in values]
    divisor = 0
    for value in ints:
        divisor = gcd(divisor, value)
    return LengthVector(tuple(Fraction(v // divisor) for v in ints))


def lp_realizable(candidate: ChamberSignature) -> RealizabilityCertificate:
    """精确单纯形判定候选签名能否由有序一般向量实现，可行时给出整数见证并复核签名"""
    if not is_down_closed(candidate.short_with_n, candidate.m):
        raise PreconditionError('候选签名在包含关系或支配关系下不向下封闭', code='not_down_closed')
    margin, values = solve_margin(candidate.n, candidate.maximal_short(), candidate.minimal_long())
    if margin <= 0:
        return RealizabilityCertificate(feasible=False, witness=None, margin=margin)
    witness = integer_witness(values)
    sig = signature(witness)
    if not sig.generic or sig.short_with_n != candidate.short_with_n:
        raise InvariantViolation(f'见证向量 {witness} 未能复现候选签名')
    return RealizabilityCertificate(feasible=True, witness=witness, margin=margin)
