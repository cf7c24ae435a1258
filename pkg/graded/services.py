import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from cohomology.services import CohomologyService
from core.exceptions import InvariantViolation, MalformedInputError, PreconditionError
from core.lengths import LengthVector
from hodge.ideals import canonical_form

from .linalg import solve
from .presentations import GradedPresentation, Space, build_presentation

logger = logging.getLogger(__name__)

SPATIAL_N4_NOTICE = (
    'n=4 时结论不成立：ℓ=(1,1,1,2) 与 ℓ′=(1,2,2,2) 位于不同房室，'
    '但 N_ℓ 与 N_ℓ′ 都微分同胚于 S²'
)


@dataclass(frozen=True)
class GradedDims:
    space: str
    dims: Tuple[int, ...]

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * v for k, v in enumerate(self.dims))

    @property
    def symmetric(self) -> bool:
        return self.dims == self.dims[::-1]


@dataclass(frozen=True)
class W1Solution:
    basis: Tuple[str, ...]
    particular: int
    nullspace: Tuple[int, ...]

    @property
    def unique(self) -> bool:
        return not self.nullspace

    @property
    def solution_count(self) -> int:
        return 1 << len(self.nullspace)

    def expression(self, vector: Optional[int] = None) -> str:
        vector = self.particular if vector is None else vector
        terms = [name for j, name in enumerate(self.basis) if vector >> j & 1]
        return ' + '.join(terms) or '0'


class GradedRingService:
    """M̄_ℓ 与 N_ℓ 的 Z₂ 上同调环业务逻辑服务类"""

    def __init__(self):
        self.cohomology = CohomologyService()

    def presentation(self, lv: LengthVector, space: str = Space.MBAR, all_long: bool = False) -> GradedPresentation:
        return build_presentation(lv, space, all_long=all_long)

    def graded_dims(self, lv: LengthVector, space: str = Space.MBAR, all_long: bool = False) -> GradedDims:
        """
        按次数计算商空间维数：单项式个数减去关系倍式的秩
        N 情形变量为 2 次，维数序列在奇数次为零
        """
        presentation = self.presentation(lv, space, all_long)
        dims = presentation.dims()
        if presentation.variable_degree == 2:
            doubled = []
            for k, d in enumerate(dims):
                if k:
                    doubled.append(0)
                doubled.append(d)
            dims = doubled
        logger.debug(f'{space} 维数 {tuple(dims)}（ℓ={lv}）')
        return GradedDims(space=str(space), dims=tuple(dims))

    def extract_w1(self, lv: LengthVector) -> W1Solution:
        """
        对 H¹ 的每个基元 v 解 v² = v·u，未知量为 u ∈ H¹
        H¹ 的基取一次单项式中的非主元列；n ≥ 5 时解唯一（应为 R）
        """
        presentation = self.presentation(lv, Space.MBAR)
        monos1, echelon1 = presentation.degree_space(1)
        pivots = set(echelon1.pivots)
        basis = [mono for i, mono in enumerate(monos1) if i not in pivots]
        if presentation.top < 2:
            # H² = 0，方程全部平凡
            return W1Solution(
                basis=tuple(presentation.name(mono) for mono in basis),
                particular=0,
                nullspace=tuple(1 << j for j in range(len(basis))),
            )
        monos2, echelon2 = presentation.degree_space(2)
        index2 = {mono: i for i, mono in enumerate(monos2)}

        def coords(x, y) -> int:
            product = presentation.multiply(x, y)
            if product is None:
                return 0
            return echelon2.reduce(1 << index2[product])

        equations: List[int] = []
        for v in basis:
            square = coords(v, v)
            columns = [coords(v, h) for h in basis]
            for bit in range(len(monos2)):
                row = square >> bit & 1
                for j, column in enumerate(columns):
                    if column >> bit & 1:
                        row |= 1 << (j + 1)
                if row:
                    equations.append(row)
        solution = solve(equations, len(basis))
        if solution is None:
            raise MalformedInputError('方程组 v² = v·u 无解，表示有误', code='w1_no_solution')
        result = W1Solution(
            basis=tuple(presentation.name(mono) for mono in basis),
            particular=solution.particular,
            nullspace=tuple(solution.nullspace),
        )
        if lv.n >= 5 and not result.unique:
            raise InvariantViolation(f'n={lv.n} 时 w₁ 应唯一，实际解空间维数 {len(result.nullspace)}')
        return result

    def quotient_by_w1(self, lv: LengthVector) -> GradedDims:
        """H*(M̄_ℓ;Z₂)/(w₁) 的维数，应与 Z₂⊗B*_ℓ 的各次秩一致"""
        presentation = self.presentation(lv, Space.MBAR)
        dims = tuple(presentation.dims(kill_r=True))
        ranks = self.cohomology.balanced_presentation(lv).ranks()
        if dims != ranks:
            raise InvariantViolation(f'商环维数 {dims} 与平衡子代数秩 {ranks} 不一致')
        return GradedDims(space=str(Space.MBAR), dims=dims)

    def spatial_invariant(self, lv: LengthVector) -> dict:
        """N_ℓ 表示经次数减半后的不变量：M̄ 维数、w₁、i(ℓ) 与剥离后理想的规范形"""
        ordered, _ = lv.sorted_with_permutation()
        if not any(self.cohomology.betti(ordered).b):
            top = ordered.n - 3
            return {
                'dims': (0,) * (2 * top + 1),
                'halved_dims': (0,) * (top + 1),
                'w1': None,
                'i_of_ell': None,
                'canonical_ideal': [],
            }
        spatial = self.graded_dims(ordered, Space.N)
        planar = self.graded_dims(ordered, Space.MBAR)
        if spatial.dims[::2] != planar.dims:
            raise InvariantViolation(f'N 情形维数 {spatial.dims} 减半后不等于 M̄ 情形 {planar.dims}')
        w1 = self.extract_w1(ordered)
        balanced = self.cohomology.balanced_presentation(ordered)
        canonical, _ = canonical_form(balanced.stripped())
        return {
            'dims': spatial.dims,
            'halved_dims': planar.dims,
            'w1': w1.expression(),
            'i_of_ell': balanced.first_killed,
            'canonical_ideal': canonical.sorted_generators(),
        }

    def spatial_pipeline(self, lv: LengthVector, other: LengthVector) -> dict:
        if lv.n != other.n:
            raise PreconditionError(f'两个向量维数不一致: {lv.n} 与 {other.n}')
        if lv.n == 4:
            raise PreconditionError(SPATIAL_N4_NOTICE, code='n4_counterexample')
        if lv.n < 5:
            raise PreconditionError(f'空间多边形比较要求 n ≥ 5，实际 n={lv.n}', code='n_too_small')
        left = self.spatial_invariant(lv)
        right = self.spatial_invariant(other)
        stage = None
        if left['dims'] != right['dims']:
            stage = 'gf2-dims'
        elif (left['i_of_ell'], left['canonical_ideal']) != (right['i_of_ell'], right['canonical_ideal']):
            stage = 'w1-quotient'
        return {
            'same_chamber': stage is None,
            'stage': stage,
            'left': left,
            'right': right,
        }
