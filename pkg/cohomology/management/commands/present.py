"""
平衡子代数表示命令
使用方法: python manage.py present --lv 1,1,1,1,1 [--json]
"""
from cohomology.serializers import PresentationSerializer
from cohomology.services import CohomologyService
from core.exceptions import PreconditionError
from core.management.base import PolySpaceCommand


class Command(PolySpaceCommand):
    help = '输出平衡子代数 B*_ℓ 的单项式理想表示、i(ℓ)，以及（条件满足时）缺陷 K*_ℓ 的基'

    def add_arguments(self, parser):
        parser.add_argument('--lv', required=True, help='长度向量，如 "1,1,1,1,1"')

    def compute(self, **options):
        lv, _ = self.load_vectors(options['lv'])
        service = CohomologyService()
        presentation = service.balanced_presentation(lv)
        try:
            defect, note = service.defect_basis(lv), ''
        except PreconditionError as exc:
            defect, note = None, exc.message
        return PresentationSerializer({
            'lv': lv,
            'generators': presentation.generator_names,
            'minimal_monomials': presentation.ideal.generators,
            'i_of_ell': presentation.first_killed,
            'ranks': presentation.ranks(),
            'defect_basis': defect,
            'defect_note': note,
        }).data

    def render_text(self, result, **options):
        self.stdout.write(f'生成元: {", ".join(result["generators"])}')
        self.stdout.write(f'极小单项式: {", ".join(result["minimal_monomials"]) or "无"}')
        self.stdout.write(f'i(ℓ) = {result["i_of_ell"]}，rk B* = {tuple(result["ranks"])}')
        if result['defect_basis'] is None:
            self.stdout.write(self.style.WARNING(f'缺陷基不可用: {result["defect_note"]}'))
        else:
            for degree, monos in result['defect_basis'].items():
                self.stdout.write(f'K^{degree}: {", ".join(monos)}')
