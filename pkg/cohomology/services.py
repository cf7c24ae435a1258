import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.exceptions import PreconditionError
from core.lengths import LengthVector
from core.subsets import SignatureFamily, SubsetClass, bitset, signature
from hodge.ideals import MonomialIdeal, minimal_sets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    b: Tuple[int, ...]
    a: Tuple[int, ...]
    a_tilde: Tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * v for k, v in enumerate(self.b))


@dataclass(frozen=True)
class CaseRow:
    label: str
    b0: int
    b1: Optional[int]
    b_top: int


@dataclass(frozen=True)
class BalancedPresentation:
    n: int
    ideal: MonomialIdeal
    first_killed: int

    @property
    def m(self) -> int:
        return self.n - 1

    @property
    def generator_names(self) -> List[str]:
        return [f'X{i}' for i in range(1, self.n)]

    def ranks(self) -> Tuple[int, ...]:
        """B* 各次数的秩：不在理想中的无平方单项式个数，次数 0..n-3"""
        counts = [0] * (self.n - 2)
        for mono in range(1 << self.m):
            k = mono.bit_count()
            if k < len(counts) and not self.ideal.contains(mono):
                counts[k] += 1
        return tuple(counts)

    def stripped(self) -> MonomialIdeal:
        """去掉被消去的变量 X_j (j ≥ i(ℓ)) 后得到的不含单变量生成元的理想"""
        keep = self.first_killed - 1
        gens = [g for g in self.ideal.generators if g.bit_count() > 1]
        return MonomialIdeal(m=keep, generators=frozenset(gens))


@dataclass(frozen=True)
class DefectBasis:
    n: int
    by_degree: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    def rank(self, degree: int) -> int:
        return len(self.by_degree.get(degree, ()))

    @property
    def empty(self) -> bool:
        return not any(self.by_degree.values())

    def monomials(self) -> List[int]:
        return [mono for degree in sorted(self.by_degree) for mono in self.by_degree[degree]]


class CohomologyService:
    """多边形空间上同调不变量业务逻辑服务类"""

    def betti(self, lv: LengthVector) -> BettiTable:
        """
        b_k = a_k + a_{n-3-k} + ã_k
        a_k、ã_k 分别是含 n、大小为 k+1 的短集与中位集个数；{n} 为长集时空间为空
        """
        sig = signature(lv)
        return self._betti_from_signature(sig)

    def _betti_from_signature(self, sig: SignatureFamily) -> BettiTable:
        top = sig.n - 3
        a = [0] * (top + 1)
        a_tilde = [0] * (top + 1)
        if sig.class_with_n(0) == SubsetClass.LONG:
            zero = tuple(a)
            return BettiTable(b=zero, a=zero, a_tilde=zero)
        for subset in sig.short_with_n:
            k = subset.bit_count()
            if k <= top:
                a[k] += 1
        for subset in sig.median_with_n:
            k = subset.bit_count()
            if k <= top:
                a_tilde[k] += 1
        b = tuple(a[k] + a[top - k] + a_tilde[k] for k in range(top + 1))
        return BettiTable(b=b, a=tuple(a), a_tilde=tuple(a_tilde))

    def euler_characteristic(self, lv: LengthVector) -> int:
        return self.betti(lv).euler_characteristic

    def case_table_row(self, lv: LengthVector) -> CaseRow:
        """按 {n}、{n-2,n-1}、{n-2,n}、{n-1,n} 的分类确定 (b_0, b_1, b_{n-3})"""
        n = lv.n
        if n <= 4:
            raise PreconditionError(f'Betti 数分类表要求 n > 4，实际 n={n}')
        sig = signature(lv)
        top_class = sig.class_with_n(0)
        if top_class == SubsetClass.LONG:
            return CaseRow('n_long', 0, 0, 0)
        if top_class == SubsetClass.MEDIAN:
            return CaseRow('n_median', 1, 0, 0)
        full = (1 << (n - 1)) - 1
        pair = bitset([n - 2, n - 1])
        # {n-2, n-1} 不含 n，用补集 [n-1]∖{n-2,n-1} ∪ {n} 的分类取反
        pair_class = sig.class_with_n(full ^ pair)
        if pair_class == SubsetClass.SHORT:
            return CaseRow('pair_long', 2, 2 * n - 6, 2)
        if pair_class == SubsetClass.MEDIAN:
            low = sig.class_with_n(bitset([n - 2]))
            high = sig.class_with_n(bitset([n - 1]))
            if low == SubsetClass.LONG:
                return CaseRow('pair_median_both_long', 1, 2 * n - 6, 2)
            if high == SubsetClass.LONG:
                return CaseRow('pair_median_one_median', 1, 2 * n - 5, 2)
            return CaseRow('pair_median_both_median', 1, 2 * n - 4, 2)
        return CaseRow('main', 1, None, 1)

    def balanced_presentation(self, lv: LengthVector) -> BalancedPresentation:
        """
        B*_ℓ = 外代数(X_1..X_{n-1}) / I，X_{r_1}…X_{r_i} ∈ I 当且仅当 {r_1..r_i, n} 为长集
        只保留极小生成元；i(ℓ) 为使 {i, n} 为长集的最小下标（不存在时为 n）
        """
        sig = signature(lv)
        top_class = sig.class_with_n(0)
        if top_class != SubsetClass.SHORT:
            raise PreconditionError(f'{{n}} 为{top_class.label}集，平衡子代数的表示要求 {{n}} 为短集',
                                    code='top_not_short')
        n = sig.n
        ideal = MonomialIdeal(m=n - 1, generators=minimal_sets(sig.long_with_n))
        first_killed = n
        for i in range(1, n):
            if sig.class_with_n(bitset([i])) == SubsetClass.LONG:
                first_killed = i
                break
        return BalancedPresentation(n=n, ideal=ideal, first_killed=first_killed)

    def defect_basis(self, lv: LengthVector) -> DefectBasis:
        """K* 的基：{r_1..r_i, n} 为中位集的单项式 X_{r_1}…X_{r_i}，按次数 i 分组"""
        self._require_middle_rows(lv)
        sig = signature(lv)
        by_degree: Dict[int, List[int]] = {}
        for subset in sorted(sig.median_with_n):
            by_degree.setdefault(subset.bit_count(), []).append(subset)
        return DefectBasis(n=sig.n, by_degree={k: tuple(v) for k, v in by_degree.items()})

    def normal_via_cup(self, lv: LengthVector) -> bool:
        """
        b_0 = b_{n-3} = 1 时：若 b_1 > rk B¹ 则 H¹ 含非平衡类，ℓ 非正规；
        否则 ℓ 正规当且仅当所有 n-3 重一次类乘积在模去缺陷理想后为零
        """
        table = self.betti(lv)
        if table.b[0] != 1 or table.b[-1] != 1:
            raise PreconditionError(f'要求 b_0 = b_{{n-3}} = 1，实际 b={table.b}', code='betti_hypothesis')
        presentation = self.balanced_presentation(lv)
        ranks = presentation.ranks()
        if len(table.b) > 1 and table.b[1] > ranks[1]:
            return False
        sig = signature(lv)
        degree = lv.n - 3
        for mono in range(1 << (lv.n - 1)):
            if mono.bit_count() == degree and mono in sig.short_with_n:
                return False
        return True

    def _require_middle_rows(self, lv: LengthVector) -> None:
        n = lv.n
        ordered, _ = lv.sorted_with_permutation()
        sig = signature(ordered)
        full = (1 << (n - 1)) - 1
        if sig.class_with_n(0) != SubsetClass.SHORT:
            raise PreconditionError('缺陷基要求 {n} 为短集', code='defect_hypothesis')
        if sig.class_with_n(full ^ bitset([n - 2, n - 1])) != SubsetClass.LONG:
            raise PreconditionError('缺陷基要求 {n-2, n-1} 为短集', code='defect_hypothesis')
