"""
两个长度向量的逐级比较命令
使用方法: python manage.py compare --lv1 1,1,1,2 --lv2 1,2,2,2 [--spatial] [--json]
"""
from core.management.base import PolySpaceCommand
from graded.services import GradedRingService
from hodge.serializers import CompareSerializer, SpatialCompareSerializer
from hodge.services import HodgeService


class Command(PolySpaceCommand):
    help = '逐级比较两个长度向量的上同调不变量，给出是否同房室（同层）以及首个区分阶段'

    def add_arguments(self, parser):
        parser.add_argument('--lv1', required=True, help='第一个长度向量')
        parser.add_argument('--lv2', required=True, help='第二个长度向量')
        parser.add_argument('--spatial', action='store_true',
                            help='改用 N_ℓ（空间多边形）的 Z₂ 上同调比较，要求 n ≥ 5')

    def compute(self, **options):
        lv, other = self.load_vectors(options['lv1'], options['lv2'])
        if options['spatial']:
            result = GradedRingService().spatial_pipeline(lv, other)
            return SpatialCompareSerializer({'lv1': lv, 'lv2': other, **result}).data
        result = HodgeService().compare(lv, other)
        return CompareSerializer({'lv1': lv, 'lv2': other, **result}).data

    def render_text(self, result, **options):
        if 'verdict' not in result:
            same = result['same_chamber']
            verdict = self.style.SUCCESS('同一房室') if same else self.style.WARNING('不同房室')
            self.stdout.write(f'N_ℓ 比较: {verdict}')
            if result['stage']:
                self.stdout.write(f'区分阶段: {result["stage"]}')
            return
        for stage in result['stages']:
            if stage['skipped']:
                mark = f'跳过（{stage["skipped"]}）'
            else:
                mark = '相同' if stage['equal'] else '不同'
            self.stdout.write(f'{stage["stage"]}: {mark}')
        style = self.style.SUCCESS if result['same'] else self.style.WARNING
        self.stdout.write(style(f'结论: {result["verdict"]}'))
        if result['stage']:
            self.stdout.write(f'区分阶段: {result["stage"]}')
