"""
Betti 数命令
使用方法: python manage.py betti --lv 1,1,1,1,1 [--json]
"""
from cohomology.serializers import BettiSerializer, CaseRowSerializer
from cohomology.services import CohomologyService
from core.exceptions import PreconditionError
from core.management.base import PolySpaceCommand


class Command(PolySpaceCommand):
    help = '计算平面多边形空间 M_ℓ 的 Betti 数 b_0..b_{n-3}，n > 4 时同时给出分类表所属行'

    def add_arguments(self, parser):
        parser.add_argument('--lv', required=True, help='长度向量，如 "1,1,1,1,1"')

    def compute(self, **options):
        lv, _ = self.load_vectors(options['lv'])
        service = CohomologyService()
        table = service.betti(lv)
        result = dict(BettiSerializer({
            'b': table.b,
            'a': table.a,
            'a_tilde': table.a_tilde,
            'euler_characteristic': table.euler_characteristic,
        }).data)
        try:
            result['case'] = CaseRowSerializer(service.case_table_row(lv)).data
        except PreconditionError:
            result['case'] = None
        return result

    def render_text(self, result, **options):
        self.stdout.write('b = (' + ', '.join(str(v) for v in result['b']) + ')')
        self.stdout.write(f'a = {tuple(result["a"])}，ã = {tuple(result["a_tilde"])}，χ = {result["euler_characteristic"]}')
        case = result['case']
        if case:
            b1 = '-' if case['b1'] is None else case['b1']
            self.stdout.write(f'分类表: {case["label"]} → (b_0, b_1, b_{{n-3}}) = ({case["b0"]}, {b1}, {case["b_top"]})')
