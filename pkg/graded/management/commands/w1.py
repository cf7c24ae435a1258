"""
第一 Stiefel-Whitney 类命令
使用方法: python manage.py w1 --lv 1,1,1,1,1 [--json]
"""
from core.management.base import PolySpaceCommand
from graded.serializers import W1Serializer
from graded.services import GradedRingService


class Command(PolySpaceCommand):
    help = '解 v² = v·u（v 取遍 H¹ 的基）求 w₁(ℓ)，并给出 H*(M̄_ℓ;Z₂)/(w₁) 的维数'

    def add_arguments(self, parser):
        parser.add_argument('--lv', required=True, help='长度向量，如 "1,1,1,1,1"')

    def compute(self, **options):
        lv, _ = self.load_vectors(options['lv'])
        service = GradedRingService()
        solution = service.extract_w1(lv)
        alternatives = []
        for combo in range(1, solution.solution_count):
            shift = solution.particular
            for j, vec in enumerate(solution.nullspace):
                if combo >> j & 1:
                    shift ^= vec
            alternatives.append(solution.expression(shift))
        return W1Serializer({
            'lv': lv,
            'basis': solution.basis,
            'w1': solution.expression(),
            'unique': solution.unique,
            'solution_count': solution.solution_count,
            'alternatives': alternatives,
            'quotient_dims': service.quotient_by_w1(lv).dims,
        }).data

    def render_text(self, result, **options):
        self.stdout.write(f'H¹ 的基: {", ".join(result["basis"]) or "无"}')
        if result['unique']:
            self.stdout.write(self.style.SUCCESS(f'w₁ = {result["w1"]}（唯一）'))
        else:
            self.stdout.write(self.style.WARNING(
                f'解不唯一，共 {result["solution_count"]} 个: {", ".join([result["w1"], *result["alternatives"]])}'))
        self.stdout.write(f'H*(M̄)/(w₁) 维数: {tuple(result["quotient_dims"])}')
