"""
非正规长度向量体积比例的蒙特卡罗估计
使用方法: python manage.py sample_normal --n 25 --samples 1000000 --seed 1
"""
from chambers.sampling import estimate_nonnormal_volume
from chambers.serializers import VolumeEstimateSerializer
from core.management.base import PolySpaceCommand


class Command(PolySpaceCommand):
    help = '在单纯形上均匀抽样，估计非正规向量所占体积比例（99% 置信半宽）并与 24n⁶/2ⁿ 比较'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='边数 n（≥ 4）')
        parser.add_argument('--samples', type=int, default=100000, help='样本数（默认 100000）')
        parser.add_argument('--seed', type=int, default=0, help='随机种子，给定种子时结果可复现')

    def compute(self, **options):
        estimate = estimate_nonnormal_volume(options['n'], options['samples'], options['seed'])
        return VolumeEstimateSerializer({
            'n': estimate.n,
            'samples': estimate.samples,
            'seed': estimate.seed,
            'nonnormal': estimate.nonnormal,
            'fraction': estimate.fraction,
            'half_width': f'{estimate.half_width:.6g}',
            'bound': estimate.bound,
            'below_bound': estimate.below_bound,
        }).data

    def render_text(self, result, **options):
        fraction = result['nonnormal'] / result['samples']
        self.stdout.write(f'n={result["n"]}，样本 {result["samples"]}，种子 {result["seed"]}')
        self.stdout.write(f'非正规比例 {fraction:.6f} ± {result["half_width"]}（99%）')
        style = self.style.SUCCESS if result['below_bound'] else self.style.WARNING
        self.stdout.write(style(f'上界 24n⁶/2ⁿ = {result["bound"]}，低于上界: {result["below_bound"]}'))
