"""
无平方单项式理想（离散 Hodge 代数）

生成元为 {1..m} 上的位图，X_r² 默认属于理想。两个不含单变量生成元的理想
同构当且仅当存在变量双射把一组生成元映到另一组。
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from core.exceptions import MalformedInputError, PreconditionError
from core.lengths import permute_bitset
from core.subsets import members

logger = logging.getLogger(__name__)


def minimal_sets(family: Iterable[int]) -> FrozenSet[int]:
    """包含关系下的极小元"""
    ordered = sorted(set(family), key=lambda s: (s.bit_count(), s))
    kept: List[int] = []
    for s in ordered:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True)
class VariableBijection:
    """Θ(i) = image[i-1]，均为 1 起始"""
    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise MalformedInputError(f'{self.image} 不是双射')

    @classmethod
    def identity(cls, m: int) -> 'VariableBijection':
        return cls(tuple(range(1, m + 1)))

    def apply(self, mask: int) -> int:
        return permute_bitset(mask, self.image)

    def inverse(self) -> 'VariableBijection':
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image, start=1):
            inv[j - 1] = i
        return VariableBijection(tuple(inv))

    def then(self, other: 'VariableBijection') -> 'VariableBijection':
        """先作用 self 再作用 other"""
        return VariableBijection(tuple(other.image[j - 1] for j in self.image))


@dataclass(frozen=True)
class MonomialIdeal:
    m: int
    generators: FrozenSet[int]
    squares_included: bool = True

    def __post_init__(self):
        for g in self.generators:
            if g <= 0 or g >> self.m:
                raise MalformedInputError(f'生成元 {hex(g)} 超出 {self.m} 个变量的范围')
        if minimal_sets(self.generators) != self.generators:
            raise MalformedInputError('生成元不是包含关系下的极小集')

    @classmethod
    def from_monomials(cls, m: int, monomials: Iterable[int], squares_included: bool = True) -> 'MonomialIdeal':
        return cls(m=m, generators=minimal_sets(monomials), squares_included=squares_included)

    @property
    def variable_free(self) -> bool:
        """I ∩ {X_1, …, X_m} = ∅"""
        return all(g.bit_count() > 1 for g in self.generators)

    def contains(self, monomial: int) -> bool:
        return any(g & monomial == g for g in self.generators)

    def permuted(self, theta: VariableBijection) -> 'MonomialIdeal':
        return MonomialIdeal(self.m, frozenset(theta.apply(g) for g in self.generators), self.squares_included)

    def sorted_generators(self) -> List[int]:
        return sorted(self.generators, key=lambda g: (g.bit_count(), g))

    def size_profile(self) -> Tuple[Tuple[int, int], ...]:
        counts: Dict[int, int] = {}
        for g in self.generators:
            counts[g.bit_count()] = counts.get(g.bit_count(), 0) + 1
        return tuple(sorted(counts.items()))

    def variable_profile(self, var: int) -> Tuple[int, ...]:
        """变量不变量：按生成元大小统计含该变量的生成元个数"""
        sizes = sorted({g.bit_count() for g in self.generators})
        bit = 1 << (var - 1)
        return tuple(sum(1 for g in self.generators if g & bit and g.bit_count() == s) for s in sizes)

    def describe(self) -> List[str]:
        return ['·'.join(f'X{i}' for i in members(g)) for g in self.sorted_generators()]


def _require_variable_free(*ideals: MonomialIdeal) -> None:
    for ideal in ideals:
        if not ideal.variable_free:
            raise PreconditionError('理想含有单变量生成元，需先剥离被消去的变量', code='not_variable_free')


def gubeladze_isomorphic(ideal: MonomialIdeal, other: MonomialIdeal) -> Optional[VariableBijection]:
    """
    回溯搜索变量双射 Θ 使 Θ(gens(I)) = gens(I′)
    按变量不变量剪枝，找不到时返回 None
    """
    _require_variable_free(ideal, other)
    if ideal.m != other.m:
        return None
    if ideal.size_profile() != other.size_profile():
        return None
    m = ideal.m
    targets = other.generators
    candidates = {}
    for v in range(1, m + 1):
        profile = ideal.variable_profile(v)
        candidates[v] = [w for w in range(1, m + 1) if other.variable_profile(w) == profile]
        if not candidates[v]:
            return None
    order = sorted(candidates, key=lambda v: (len(candidates[v]), v))
    gens = ideal.sorted_generators()
    mapping = [0] * (m + 1)
    used = [False] * (m + 1)
    assigned = 0

    def consistent() -> bool:
        for g in gens:
            if g & assigned != g:
                continue
            image = 0
            for i in members(g):
                image |= 1 << (mapping[i] - 1)
            if image not in targets:
                return False
        return True

    def dfs(pos: int) -> bool:
        nonlocal assigned
        if pos == m:
            return True
        v = order[pos]
        for w in candidates[v]:
            if used[w]:
                continue
            mapping[v] = w
            used[w] = True
            assigned |= 1 << (v - 1)
            if consistent() and dfs(pos + 1):
                return True
            assigned &= ~(1 << (v - 1))
            used[w] = False
            mapping[v] = 0
        return False

    if not dfs(0):
        return None
    return VariableBijection(tuple(mapping[1:]))


def _twins(ideal: MonomialIdeal, marked: FrozenSet[int] = frozenset()) -> List[List[bool]]:
    """twin[u][v]：对换 u、v 同时保持生成元集与标记单项式集"""
    m = ideal.m
    twin = [[False] * (m + 1) for _ in range(m + 1)]
    for u in range(1, m + 1):
        for v in range(u + 1, m + 1):
            image = list(range(1, m + 1))
            image[u - 1], image[v - 1] = v, u
            swap = VariableBijection(tuple(image))
            if (ideal.permuted(swap).generators == ideal.generators
                    and frozenset(swap.apply(x) for x in marked) == marked):
                twin[u][v] = twin[v][u] = True
    return twin


def canonical_form(ideal: MonomialIdeal, marked: Iterable[int] = ()) -> Tuple[MonomialIdeal, VariableBijection]:
    """
    规范形：在全部变量重标号中取生成元权重序列字典序最大者
    权重 w(g) = Σ_{k∈g} 2^{m-k}，序列按降序排列；
    给出 marked（如缺陷单项式）时，比较键为 (生成元序列, 标记序列) 的字典序。
    分支定界按新位置 1..m 依次选取原变量，用每个单项式的权重上界剪枝，
    可互换的孪生变量在同一层只尝试一个。
    """
    _require_variable_free(ideal)
    m = ideal.m
    marked = frozenset(marked)
    for x in marked:
        if x >> m:
            raise MalformedInputError(f'标记单项式 {hex(x)} 超出 {m} 个变量的范围')
    families = [ideal.sorted_generators(), sorted(marked)]
    twin = _twins(ideal, marked)
    best_key: Optional[Tuple[Tuple[int, ...], ...]] = None
    best_image: Optional[List[int]] = None
    position = [0] * (m + 1)
    fixed = [[0] * len(family) for family in families]
    remaining = [[g.bit_count() for g in family] for family in families]

    def bound(level: int) -> Tuple[Tuple[int, ...], ...]:
        free = m - level
        return tuple(
            tuple(sorted((f + (1 << free) - (1 << (free - r)) for f, r in zip(fs, rs)), reverse=True))
            for fs, rs in zip(fixed, remaining)
        )

    def current() -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(fs, reverse=True)) for fs in fixed)

    def assign(var: int, level: int, sign: int) -> None:
        weight = 1 << (m - level - 1)
        bit = 1 << (var - 1)
        for family, fs, rs in zip(families, fixed, remaining):
            for idx, g in enumerate(family):
                if g & bit:
                    fs[idx] += sign * weight
                    rs[idx] -= sign

    def dfs(level: int, unused: List[int]) -> None:
        nonlocal best_key, best_image
        if level == m:
            key = current()
            if best_key is None or key > best_key:
                best_key = key
                best_image = position[1:]
            return
        children = []
        tried: List[int] = []
        for var in unused:
            if any(twin[var][u] for u in tried):
                continue
            tried.append(var)
            assign(var, level, 1)
            children.append((bound(level + 1), var))
            assign(var, level, -1)
        children.sort(reverse=True)
        for upper, var in children:
            if best_key is not None and upper <= best_key:
                continue
            position[var] = level + 1
            assign(var, level, 1)
            dfs(level + 1, [u for u in unused if u != var])
            assign(var, level, -1)
            position[var] = 0

    dfs(0, list(range(1, m + 1)))
    if best_image is None:
        # m = 0：没有变量
        best_image = []
    theta = VariableBijection(tuple(best_image))
    return ideal.permuted(theta), theta
