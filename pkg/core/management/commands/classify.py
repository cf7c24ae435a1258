"""
长度向量分类命令
使用方法: python manage.py classify --lv 1,1,1,1,1 [--lv2 2,2,2,2,5] [--subset 1,2,5] [--json]
"""
from core.lengths import LengthVector
from core.management.base import PolySpaceCommand
from core.exceptions import LengthVectorError
from core.serializers import ClassifySerializer
from core.services import CombinatoricsService
from core.subsets import bitset, classify_subset, members


class Command(PolySpaceCommand):
    help = '对长度向量做子集分类：签名、一般位置、正规性，可选比较两个向量是否同层'

    def add_arguments(self, parser):
        parser.add_argument('--lv', required=True, help='长度向量，如 "1,1,1,1,1" 或 "1/2,1/3,1"')
        parser.add_argument('--lv2', help='第二个长度向量，给出时判断是否同层')
        parser.add_argument('--subset', help='只判定一个子集 J，如 "1,2,5"')

    def compute(self, **options):
        lv, other = self.load_vectors(options['lv'], options.get('lv2'))
        if options.get('subset'):
            return self._classify_one(lv, options['subset'])
        report = CombinatoricsService().classify_vector(lv, other)
        return ClassifySerializer(report).data

    def _classify_one(self, lv: LengthVector, text: str):
        try:
            indices = [int(t) for t in text.split(',') if t.strip()]
        except ValueError as exc:
            raise LengthVectorError(f'无法解析的子集: {text!r}') from exc
        mask = bitset(indices) if all(i >= 1 for i in indices) else -1
        verdict = classify_subset(lv, mask)
        return {'lv': lv.as_strings(), 'subset': members(mask), 'class': str(verdict)}

    def render_text(self, result, **options):
        if 'class' in result:
            self.stdout.write(f'子集 {result["subset"]}: {result["class"]}')
            return
        self.stdout.write(f'ℓ = ({", ".join(result["lv"])})，n = {len(result["lv"])}')
        self.stdout.write(f'排序置换: {result["permutation"]}')
        self.stdout.write(f'一般位置: {"是" if result["generic"] else "否"}')
        self.stdout.write(f'正规: {"是" if result["normal"] else "否"}')
        self.stdout.write(f'{{n}}: {result["top_class"]}，{{n-2,n-1}}: {result["pair_class"]}')
        sig = result['signature']
        self.stdout.write(f'|S⁰| = {len(sig["short_without_n"])}，|S¹| = {len(sig["short_with_n"])}，'
                          f'中位集(含 n) = {len(sig["median_with_n"])}')
        if 'same_stratum' in result:
            verdict = self.style.SUCCESS('同层') if result['same_stratum'] else self.style.WARNING('不同层')
            self.stdout.write(f'与 ℓ′ 比较: {verdict}')
