import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from django.conf import settings

from cohomology.services import BalancedPresentation, CohomologyService, DefectBasis
from core.exceptions import MalformedInputError, PreconditionError
from core.lengths import LengthVector
from core.subsets import SignatureFamily, SubsetClass, bitset, signature
from graded.presentations import Space
from graded.services import GradedRingService

from .ideals import canonical_form

logger = logging.getLogger(__name__)

GENERIC_STAGES = ('gf2-dims', 'w1-quotient', 'signature')
STRATUM_STAGES = ('betti', 'balanced', 'defect', 'signature')


@dataclass(frozen=True)
class StageResult:
    stage: str
    left: object
    right: object
    skipped: str = ''

    @property
    def equal(self) -> bool:
        return not self.skipped and self.left == self.right


@dataclass
class AuditReport:
    n: int
    chambers: int
    collisions: List[Tuple[str, str]] = field(default_factory=list)
    mbar_collisions: List[Tuple[str, str]] = field(default_factory=list)
    signature_collisions: List[Tuple[str, str]] = field(default_factory=list)
    round_trip_checked: int = 0
    round_trip_failed: int = 0
    round_trip_skipped: int = 0


def _as_list(key):
    if isinstance(key, (tuple, list)):
        return [_as_list(item) for item in key]
    return key


def _audit_entry(lv: LengthVector) -> Tuple[tuple, tuple, tuple, Optional[bool]]:
    service = HodgeService()
    return (
        service.m_level_key(lv),
        service.mbar_level_key(lv),
        tuple(sorted(signature(lv).short_with_n)),
        service.round_trip(lv),
    )


class HodgeService:
    """离散 Hodge 代数比较与 Walker 重构业务逻辑服务类"""

    def __init__(self, workers: Optional[int] = None):
        self.workers = max(1, workers or settings.POLYSPACE_WORKERS)
        self.cohomology = CohomologyService()
        self.graded = GradedRingService()

    def walker_recover(self, balanced: BalancedPresentation, defect: Optional[DefectBasis] = None) -> SignatureFamily:
        """
        由平衡子代数的理想（及缺陷基）还原含 n 的长集族与中位族
        X_F ∈ I ⇔ F∪{n} 为长集；缺陷基给出中位集，其余理想外的 F 为短集
        """
        n = balanced.n
        m = n - 1
        full = (1 << m) - 1
        ideal = balanced.ideal
        if not ideal.contains(full ^ bitset([n - 2, n - 1])):
            raise PreconditionError('Walker 重构要求 {n-2, n-1} 为短集', code='walker_hypothesis')
        medians = frozenset(defect.monomials()) if defect is not None else frozenset()
        outside = []
        for subset in range(1 << m):
            if ideal.contains(subset):
                if subset in medians:
                    raise MalformedInputError(f'缺陷单项式 {hex(subset)} 落在理想中', code='defect_in_ideal')
                continue
            if not ideal.contains(full ^ subset):
                raise MalformedInputError(
                    f'X_F 与 X_补集 都不在理想中（F={hex(subset)}），与补集规则矛盾', code='complement_rule')
            outside.append(subset)
        short_with_n = frozenset(s for s in outside if s not in medians)
        long_with_n = frozenset(s for s in range(1 << m) if ideal.contains(s))
        return SignatureFamily(
            n=n,
            short_without_n=frozenset(full ^ s for s in long_with_n),
            short_with_n=short_with_n,
            median_with_n=medians,
        )

    def round_trip(self, lv: LengthVector) -> Optional[bool]:
        """walker_recover ∘ balanced_presentation 是否还原签名；前提不成立时返回 None"""
        try:
            balanced = self.cohomology.balanced_presentation(lv)
            defect = None
            if not signature(lv).generic:
                defect = self.cohomology.defect_basis(lv)
            recovered = self.walker_recover(balanced, defect)
        except PreconditionError:
            return None
        return recovered == signature(lv)

    def m_level_key(self, lv: LengthVector) -> tuple:
        """M 层不变量：i(ℓ) 与剥离被消去变量后理想的规范形"""
        sig = signature(lv)
        top_class = sig.class_with_n(0)
        if top_class == SubsetClass.LONG:
            return ('empty',)
        if top_class == SubsetClass.MEDIAN:
            return ('top_median',)
        balanced = self.cohomology.balanced_presentation(lv)
        canonical, _ = canonical_form(balanced.stripped())
        return balanced.first_killed - 1, tuple(canonical.sorted_generators())

    def mbar_level_key(self, lv: LengthVector) -> tuple:
        """M̄ 层不变量：n=4 只看 Z₂ 维数，n ≥ 5 与 M 层相同"""
        if lv.n == 4:
            return self.planar_dims(lv)
        return self.m_level_key(lv)

    def planar_dims(self, lv: LengthVector) -> Tuple[int, ...]:
        if not any(self.cohomology.betti(lv).b):
            return (0,) * (lv.n - 2)
        return self.graded.graded_dims(lv, Space.MBAR).dims

    def defect_key(self, lv: LengthVector) -> tuple:
        """缺陷层不变量：理想与中位单项式在同一变量双射下的规范形"""
        balanced = self.cohomology.balanced_presentation(lv)
        defect = self.cohomology.defect_basis(lv)
        canonical, theta = canonical_form(balanced.stripped(), marked=defect.monomials())
        marked = sorted(theta.apply(x) for x in defect.monomials())
        return balanced.first_killed - 1, tuple(canonical.sorted_generators()), tuple(marked)

    def _stage(self, stage: str, lv: LengthVector, other: LengthVector) -> StageResult:
        try:
            if stage == 'gf2-dims':
                return StageResult(stage, self.planar_dims(lv), self.planar_dims(other))
            if stage == 'w1-quotient':
                if lv.n < 5:
                    return StageResult(stage, None, None, skipped='n=4 时 w₁ 不唯一')
                return StageResult(stage, self.m_level_key(lv), self.m_level_key(other))
            if stage == 'betti':
                return StageResult(stage, self.cohomology.betti(lv).b, self.cohomology.betti(other).b)
            if stage == 'balanced':
                return StageResult(stage, self.m_level_key(lv), self.m_level_key(other))
            if stage == 'defect':
                return StageResult(stage, self.defect_key(lv), self.defect_key(other))
        except PreconditionError as exc:
            return StageResult(stage, None, None, skipped=exc.message)
        sig, sig_other = signature(lv), signature(other)
        return StageResult(
            stage,
            (tuple(sorted(sig.short_with_n)), tuple(sorted(sig.median_with_n))),
            (tuple(sorted(sig_other.short_with_n)), tuple(sorted(sig_other.median_with_n))),
        )

    def compare(self, lv: LengthVector, other: LengthVector) -> dict:
        """
        逐级比较两个向量的不变量，返回是否同房室（或同层）以及首个区分它们的阶段
        都在一般位置时依次比较 Z₂ 维数、模 w₁ 的商、签名；否则比较 Betti 数、平衡理想、缺陷、签名
        """
        if lv.n != other.n:
            raise PreconditionError(f'维数不一致: {lv.n} 与 {other.n}', code='mismatched_n')
        generic = signature(lv).generic and signature(other).generic
        stages = GENERIC_STAGES if generic else STRATUM_STAGES
        results = []
        distinguished = None
        for stage in stages:
            result = self._stage(stage, lv, other)
            results.append(result)
            if not result.skipped and not result.equal:
                distinguished = stage
                break
        same = distinguished is None
        unit = 'chamber' if generic else 'stratum'
        return {
            'verdict': f'{"same" if same else "different"} {unit}',
            'same': same,
            'stage': distinguished,
            'stages': [
                {'stage': r.stage, 'left': _as_list(r.left), 'right': _as_list(r.right),
                 'equal': r.equal, 'skipped': r.skipped}
                for r in results
            ],
        }

    def _entries(self, vectors: Sequence[LengthVector]) -> Iterable[tuple]:
        if self.workers == 1:
            return [_audit_entry(lv) for lv in vectors]
        with Pool(processes=self.workers) as pool:
            return pool.map(_audit_entry, vectors)

    def walker_audit(self, n: int, witnesses: Sequence[LengthVector]) -> AuditReport:
        """
        对数据库中的每对不同房室检查不变量是否不同
        M 层用规范化的平衡理想，M̄ 层在 n=4 时用 Z₂ 维数（已知会出现碰撞）
        """
        report = AuditReport(n=n, chambers=len(witnesses))
        buckets: Dict[str, Dict[tuple, str]] = {'m': {}, 'mbar': {}, 'signature': {}}
        targets = {'m': report.collisions, 'mbar': report.mbar_collisions, 'signature': report.signature_collisions}
        for lv, (m_key, mbar_key, sig_key, trip) in zip(witnesses, self._entries(witnesses)):
            label = ','.join(lv.as_strings())
            for level, key in (('m', m_key), ('mbar', mbar_key), ('signature', sig_key)):
                seen = buckets[level].get(key)
                if seen is None:
                    buckets[level][key] = label
                else:
                    targets[level].append((seen, label))
            if trip is None:
                report.round_trip_skipped += 1
            else:
                report.round_trip_checked += 1
                if not trip:
                    report.round_trip_failed += 1
                    logger.error(f'Walker 重构失败: ℓ={label}')
        logger.info(f'审计完成: n={n}，{len(witnesses)} 个房室，M 层碰撞 {len(report.collisions)}，'
                    f'M̄ 层碰撞 {len(report.mbar_collisions)}')
        return report
