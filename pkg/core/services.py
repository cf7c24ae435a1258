import logging
from typing import Any, Dict, Optional

from .lengths import LengthVector
from .subsets import (
    SubsetClass,
    bitset,
    classify_subset,
    is_normal,
    same_stratum,
    signature,
)

logger = logging.getLogger(__name__)


class CombinatoricsService:
    """子集分类业务逻辑服务类"""

    def classify_vector(self, lv: LengthVector, other: Optional[LengthVector] = None) -> Dict[str, Any]:
        """
        汇总长度向量的组合信息
        包括排序置换、一般位置标志、{n} 与 {n-2,n-1} 的分类、正规性
        """
        sig = signature(lv)
        ordered, perm = lv.sorted_with_permutation()
        n = lv.n
        report = {
            'lv': lv,
            'ordered': ordered,
            'permutation': perm,
            'signature': sig,
            'generic': sig.generic,
            'normal': is_normal(lv),
            'top_class': classify_subset(ordered, bitset([n])),
            'pair_class': classify_subset(ordered, bitset([n - 2, n - 1])),
            'empty': classify_subset(ordered, bitset([n])) == SubsetClass.LONG,
        }
        if other is not None:
            report['other'] = other
            report['same_stratum'] = same_stratum(lv, other)
        logger.debug(f'分类完成: ℓ={lv}, generic={sig.generic}')
        return report
