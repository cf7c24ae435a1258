"""
Z₂ 上同调维数命令
使用方法: python manage.py gf2dims --lv 1,1,1,1,1 [--space mbar|n] [--all-long] [--json]
"""
from core.management.base import PolySpaceCommand
from graded.presentations import Space
from graded.serializers import GradedDimsSerializer
from graded.services import GradedRingService


class Command(PolySpaceCommand):
    help = '由 Z₂[R,V_1..V_{n-1}]/𝓘_ℓ 计算 H*(M̄_ℓ;Z₂) 或 H*(N_ℓ;Z₂) 的各次维数（仅一般位置向量）'

    def add_arguments(self, parser):
        parser.add_argument('--lv', required=True, help='长度向量，如 "1,1,1,1,1"')
        parser.add_argument('--space', choices=Space.values, default=Space.MBAR,
                            help='mbar: 平面多边形模反射（变量 1 次）；n: 空间多边形（变量 2 次）')
        parser.add_argument('--all-long', action='store_true',
                            help='(R3) 对全部长集 L 生成，而非只对极小长集')

    def compute(self, **options):
        lv, _ = self.load_vectors(options['lv'])
        dims = GradedRingService().graded_dims(lv, options['space'], all_long=options['all_long'])
        return GradedDimsSerializer({
            'lv': lv,
            'space': dims.space,
            'dims': dims.dims,
            'total': dims.total,
            'euler_characteristic': dims.euler_characteristic,
            'relations': 'all-long' if options['all_long'] else 'minimal-long',
        }).data

    def render_text(self, result, **options):
        label = Space(result['space']).label
        self.stdout.write(f'{label}: dims = {tuple(result["dims"])}')
        self.stdout.write(f'总维数 {result["total"]}，欧拉示性数 {result["euler_characteristic"]}')
