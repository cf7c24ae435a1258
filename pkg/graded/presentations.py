"""
H*(M̄_ℓ; Z₂) 与 H*(N_ℓ; Z₂) 的表示
    Z₂[R, V_1, …, V_{n-1}] / 𝓘_ℓ
    (R1) V_i² + R·V_i
    (R2) ∏_{i∈S} V_i，S∪{n} 为长集
    (R3) Σ_{S⊊L} R^{|L−S|−1} ∏_{i∈S} V_i，L ⊆ {1..n-1} 为长集
(R1) 用于约化：单项式统一写成 R^a·V_T（T 无平方），V_T·V_U = R^{|T∩U|}·V_{T∪U}。
(R2) 体现在基里：只保留 T∪{n} 为短集的 V_T，(R3) 的各项再用 (R2) 约化。
下文的次数都以变量次数为单位（M̄ 情形与 N 情形共用），N 情形实际次数加倍。
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from django.db import models

from core.exceptions import InvariantViolation, PreconditionError
from core.lengths import LengthVector
from core.subsets import SignatureFamily, SubsetClass, members, signature
from hodge.ideals import minimal_sets

from .linalg import EchelonBasis

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]  # (a, T) 表示 R^a·V_T


class Space(models.TextChoices):
    MBAR = 'mbar', 'M̄_ℓ（平面多边形模反射）'
    N = 'n', 'N_ℓ（空间多边形）'


@dataclass(frozen=True)
class GradedPresentation:
    n: int
    variable_degree: int
    allowed: FrozenSet[int]
    r2_generators: FrozenSet[int]
    r3_sets: Tuple[int, ...]

    @property
    def m(self) -> int:
        return self.n - 1

    @property
    def top(self) -> int:
        """以变量次数为单位的最高次数 n-3"""
        return self.n - 3

    def multiply(self, x: Monomial, y: Monomial) -> Optional[Monomial]:
        a, t = x
        b, u = y
        union = t | u
        if union not in self.allowed:
            return None
        return a + b + (t & u).bit_count(), union

    def monomials(self, degree: int, kill_r: bool = False) -> List[Monomial]:
        """次数为 degree 的基单项式；R^degree 排在第 0 位"""
        out = []
        for t in sorted(self.allowed, key=lambda s: (s.bit_count(), s)):
            a = degree - t.bit_count()
            if a < 0 or (kill_r and a > 0):
                continue
            out.append((a, t))
        out.sort(key=lambda mono: (-mono[0], mono[1]))
        return out

    def killed_by_r2(self, subset: int) -> bool:
        return any(g & subset == g for g in self.r2_generators)

    def r3_terms(self, long_set: int) -> List[Monomial]:
        """
        (R3) 的各项：先写出全部 S ⊊ L，再用 (R2) 约化
        约化结果必须与只保留基内单项式的写法一致
        """
        size = long_set.bit_count()
        terms, omitted = [], []
        sub = long_set
        while True:
            sub = (sub - 1) & long_set
            term = (size - sub.bit_count() - 1, sub)
            if not self.killed_by_r2(sub):
                terms.append(term)
            if sub in self.allowed:
                omitted.append(term)
            if sub == 0:
                break
        if terms != omitted:
            raise InvariantViolation(f'(R3) 经 (R2) 约化后与基不一致: L={hex(long_set)}')
        return terms

    def relation_rows(self, degree: int, kill_r: bool = False) -> Tuple[List[Monomial], List[int]]:
        basis = self.monomials(degree, kill_r)
        index: Dict[Monomial, int] = {mono: i for i, mono in enumerate(basis)}
        rows = []
        multipliers = sorted(self.allowed, key=lambda s: (s.bit_count(), s))
        for long_set in self.r3_sets:
            rel_degree = long_set.bit_count() - 1
            spare = degree - rel_degree
            if spare < 0:
                continue
            terms = self.r3_terms(long_set)
            for u in multipliers:
                b = spare - u.bit_count()
                if b < 0 or (kill_r and b > 0):
                    continue
                row = 0
                for term in terms:
                    product = self.multiply(term, (b, u))
                    if product is None:
                        continue
                    position = index.get(product)
                    if position is not None:
                        row ^= 1 << position
                if row:
                    rows.append(row)
        return basis, rows

    def degree_space(self, degree: int, kill_r: bool = False) -> Tuple[List[Monomial], EchelonBasis]:
        basis, rows = self.relation_rows(degree, kill_r)
        return basis, EchelonBasis(rows)

    def dims(self, kill_r: bool = False) -> List[int]:
        """各次数（变量次数单位）的商空间维数"""
        out = []
        for degree in range(self.top + 1):
            basis, echelon = self.degree_space(degree, kill_r)
            out.append(len(basis) - echelon.rank)
        return out

    def name(self, mono: Monomial) -> str:
        a, t = mono
        parts = []
        if a:
            parts.append('R' if a == 1 else f'R^{a}')
        parts.extend(f'V{i}' for i in members(t))
        return '·'.join(parts) or '1'


def presentation_from_signature(sig: SignatureFamily, variable_degree: int = 1,
                                all_long: bool = False) -> GradedPresentation:
    if not sig.generic:
        raise PreconditionError('Z₂ 上同调表示只对一般位置的长度向量成立', code='not_generic')
    if sig.class_with_n(0) != SubsetClass.SHORT:
        raise PreconditionError('{n} 为长集，多边形空间为空', code='empty_space')
    full = (1 << sig.m) - 1
    # L ⊆ [n-1] 长 ⇔ ([n-1]∖L)∪{n} 短
    long_sets = {full ^ f for f in sig.short_with_n}
    chosen = long_sets if all_long else minimal_sets(long_sets)
    return GradedPresentation(
        n=sig.n,
        variable_degree=variable_degree,
        allowed=sig.short_with_n,
        r2_generators=minimal_sets(sig.long_with_n),
        r3_sets=tuple(sorted(chosen, key=lambda s: (s.bit_count(), s))),
    )


def build_presentation(lv: LengthVector, space: str = Space.MBAR, all_long: bool = False) -> GradedPresentation:
    degree = 2 if space == Space.N else 1
    return presentation_from_signature(signature(lv), variable_degree=degree, all_long=all_long)
