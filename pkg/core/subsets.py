"""
子集分类与层签名

位图约定：下标 i（1 起始）对应第 i-1 位。含 n 的子集 J 统一记作 F = J∖{n}，
F 是 {1, …, n-1} 上的位图。
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from django.db import models

from .exceptions import InvariantViolation, PreconditionError
from .lengths import LengthVector, permute_bitset


class SubsetClass(models.TextChoices):
    SHORT = 'short', '短'
    MEDIAN = 'median', '中位'
    LONG = 'long', '长'


def bitset(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def members(mask: int) -> List[int]:
    """位图转 1 起始下标列表"""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def hex_mask(mask: int) -> str:
    return hex(mask)


def parse_hex_mask(text: str) -> int:
    return int(text, 16)


def subset_sums(weights: Sequence[int]) -> List[int]:
    """sums[mask] = mask 中各下标权重之和，按最低位递推"""
    sums = [0] * (1 << len(weights))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + weights[low.bit_length() - 1]
    return sums


def _compare(twice_part: int, total: int) -> str:
    if twice_part < total:
        return SubsetClass.SHORT
    if twice_part == total:
        return SubsetClass.MEDIAN
    return SubsetClass.LONG


def classify_subset(lv: LengthVector, subset: int) -> SubsetClass:
    """比较 Σ_{i∈J} l_i 与 Σ_{i∉J} l_i，精确判定短、中位或长"""
    if subset < 0 or subset >> lv.n:
        raise PreconditionError(f'子集 {hex_mask(subset)} 含有超出 1..{lv.n} 的下标', code='index_out_of_range')
    part = sum((lv.entries[i - 1] for i in members(subset)), start=0)
    return SubsetClass(_compare(2 * part, lv.total))


def is_down_closed(family: FrozenSet[int], m: int, dominance: bool = True) -> bool:
    """检查族在包含关系（以及可选的下标支配关系）下向下封闭"""
    for mask in family:
        for pred in predecessors(mask, m, dominance=dominance):
            if pred not in family:
                return False
    return True


def predecessors(mask: int, m: int, dominance: bool = True) -> Iterator[int]:
    """
    直接前驱：去掉一个元素；或把元素 j 换成不在集合中的 j-1
    对有序 ℓ 而言，短集的所有直接前驱仍是短集
    """
    for bit in range(m):
        b = 1 << bit
        if not mask & b:
            continue
        yield mask ^ b
        if dominance and bit > 0 and not mask & (b >> 1):
            yield mask ^ b ^ (b >> 1)


@dataclass(frozen=True)
class SignatureFamily:
    n: int
    short_without_n: FrozenSet[int]
    short_with_n: FrozenSet[int]
    median_with_n: FrozenSet[int]
    permutation: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return self.n - 1

    @property
    def generic(self) -> bool:
        # 中位集的补集也是中位集，二者恰有一个含 n
        return not self.median_with_n

    @property
    def long_with_n(self) -> FrozenSet[int]:
        full = (1 << self.m) - 1
        return frozenset(full ^ s for s in self.short_without_n)

    def class_with_n(self, subset: int) -> SubsetClass:
        """含 n 的子集 F∪{n} 的分类"""
        if subset in self.short_with_n:
            return SubsetClass.SHORT
        if subset in self.median_with_n:
            return SubsetClass.MEDIAN
        return SubsetClass.LONG

    def family(self, nu: int) -> FrozenSet[int]:
        if nu == 0:
            return self.short_without_n
        if nu == 1:
            return self.short_with_n
        raise PreconditionError(f'ν 只能取 0 或 1，实际为 {nu}')


def signature(lv: LengthVector) -> SignatureFamily:
    """穷举全部含 n 的子集，得到 S⁰、S¹ 与中位族；无序输入先排序并记录置换"""
    ordered, perm = lv.sorted_with_permutation()
    weights = ordered.integer_weights()
    n = len(weights)
    m = n - 1
    total = sum(weights)
    top = weights[m]
    full = (1 << m) - 1
    short_with, median_with, short_without = set(), set(), set()
    for subset, part in enumerate(subset_sums(weights[:m])):
        verdict = _compare(2 * (part + top), total)
        if verdict == SubsetClass.SHORT:
            short_with.add(subset)
        elif verdict == SubsetClass.MEDIAN:
            median_with.add(subset)
        else:
            # J 长 ⇔ 补集（不含 n）短
            short_without.add(full ^ subset)
    return SignatureFamily(
        n=n,
        short_without_n=frozenset(short_without),
        short_with_n=frozenset(short_with),
        median_with_n=frozenset(median_with),
        permutation=perm,
    )


def same_stratum(lv: LengthVector, other: LengthVector) -> bool:
    if lv.n != other.n:
        raise PreconditionError(f'维数不一致: {lv.n} 与 {other.n}', code='mismatched_n')
    return signature(lv) == signature(other)


def long_triples_intersection(lv: LengthVector) -> Optional[int]:
    """全部长三元组的交（位图）；没有长三元组时返回 None"""
    weights = lv.integer_weights()
    total = sum(weights)
    common = None
    for triple in combinations(range(lv.n), 3):
        if 2 * sum(weights[i] for i in triple) > total:
            mask = sum(1 << i for i in triple)
            common = mask if common is None else common & mask
    return common


def normal_by_ordered_criterion(ordered: LengthVector) -> bool:
    """有序 ℓ 正规 ⇔ {n-3, n-2, n-1} 为短集或中位集"""
    if ordered.n == 3:
        return True
    w = ordered.integer_weights()
    n = ordered.n
    return 2 * (w[n - 4] + w[n - 3] + w[n - 2]) <= sum(w)


def is_normal(lv: LengthVector) -> bool:
    if lv.n == 3:
        return True
    ordered, _ = lv.sorted_with_permutation()
    common = long_triples_intersection(ordered)
    by_definition = common is None or common != 0
    shortcut = normal_by_ordered_criterion(ordered)
    if by_definition != shortcut:
        raise InvariantViolation(f'正规性两种判据不一致: ℓ={lv}')
    return by_definition


def reduce_permutation(lv: LengthVector, other: LengthVector, sigma: Sequence[int], nu: int) -> bool:
    """判断 σ(S^ν(ℓ)) 是否等于 S^ν(ℓ′)，σ 为 1 起始像数组且必须固定 n"""
    if lv.n != other.n:
        raise PreconditionError(f'维数不一致: {lv.n} 与 {other.n}', code='mismatched_n')
    n = lv.n
    if sorted(sigma) != list(range(1, n + 1)):
        raise PreconditionError(f'σ={tuple(sigma)} 不是 1..{n} 上的双射', code='invalid_permutation')
    if sigma[n - 1] != n:
        raise PreconditionError(f'σ 必须固定 n={n}', code='permutation_moves_n')
    if not (lv.is_ordered() and other.is_ordered()):
        raise PreconditionError('ℓ 与 ℓ′ 都必须是有序向量', code='unordered_vector')
    source = signature(lv).family(nu)
    target = signature(other).family(nu)
    return {permute_bitset(s, sigma) for s in source} == target
