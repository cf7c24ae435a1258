"""
非正规向量体积比例的蒙特卡罗估计

单纯形上的均匀分布取独立指数分布样本即可（归一化不影响子集比较）。
这里是全项目唯一使用浮点数的地方：抽样本身是近似的，只有计数结果以有理数报告。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from core.exceptions import PreconditionError

logger = logging.getLogger(__name__)

Z_99 = 2.5758293035489004
CHUNK = 100_000


@dataclass(frozen=True)
class VolumeEstimate:
    n: int
    samples: int
    seed: int
    nonnormal: int
    fraction: Fraction
    half_width: float
    bound: Fraction

    @property
    def below_bound(self) -> bool:
        """99% 置信上限是否严格低于 24n⁶/2ⁿ"""
        return float(self.fraction) + self.half_width < self.bound


def volume_bound(n: int) -> Fraction:
    return Fraction(24 * n ** 6, 2 ** n)


def estimate_nonnormal_volume(n: int, samples: int, seed: int) -> VolumeEstimate:
    if n < 4:
        raise PreconditionError(f'n={n} 过小，正规性估计要求 n ≥ 4')
    if samples < 1:
        raise PreconditionError('样本数必须至少为 1', code='no_samples')
    rng = np.random.default_rng(seed)
    nonnormal = 0
    remaining = samples
    while remaining:
        size = min(CHUNK, remaining)
        x = np.sort(rng.exponential(size=(size, n)), axis=1)
        triple = x[:, n - 4] + x[:, n - 3] + x[:, n - 2]
        nonnormal += int(np.count_nonzero(2 * triple > x.sum(axis=1)))
        remaining -= size
        logger.debug(f'抽样进度: {samples - remaining}/{samples}')
    p = nonnormal / samples
    half_width = Z_99 * sqrt(p * (1 - p) / samples)
    return VolumeEstimate(
        n=n,
        samples=samples,
        seed=seed,
        nonnormal=nonnormal,
        fraction=Fraction(nonnormal, samples),
        half_width=half_width,
        bound=volume_bound(n),
    )
