"""
房室枚举命令
使用方法: python manage.py enumerate --n 7 [--out chambers-7.jsonl] [--threads 4] [--resume]
"""
from pathlib import Path

from chambers.serializers import EnumerationSummarySerializer
from chambers.services import COUNT_NOTES, PUBLISHED_COUNTS, EnumerationService
from core.management.base import PolySpaceCommand


class Command(PolySpaceCommand):
    help = '枚举 n 边形长度空间中全部房室（Σ_n 轨道代表），精确线性规划给出可实现性证书并写入数据库'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='多边形边数 n')
        parser.add_argument('--out', help='输出文件（默认 CHAMBER_DB_DIR/chambers-<n>.jsonl）')
        parser.add_argument('--threads', type=int, help='工作进程数（默认 POLYSPACE_WORKERS）')
        parser.add_argument('--resume', action='store_true', help='从上次未完成的断点继续')
        parser.add_argument('--split-depth', type=int, help='搜索树拆分深度（默认 POLYSPACE_SPLIT_DEPTH）')
        parser.add_argument('--partial-lp', action='store_true', help='对部分候选也做线性规划剪枝')
        parser.add_argument('--time-limit', type=float, help='时间上限（秒），超时中止并以退出码 2 结束')
        parser.add_argument('--allow-large', action='store_true', help='允许超过默认上限的 n')
        parser.add_argument('--gzip', action='store_true', help='以 gzip 压缩写出')

    def compute(self, **options):
        service = EnumerationService(
            workers=options.get('threads'),
            split_depth=options.get('split_depth'),
            partial_lp=options.get('partial_lp', False),
            time_limit=options.get('time_limit'),
        )
        n = options['n']
        path = Path(options['out']) if options.get('out') else None
        if path is None and options.get('gzip'):
            path = service.default_path(n, compress=True)
        outcome = service.enumerate_chambers(
            n, path=path, resume=options.get('resume', False), allow_large=options.get('allow_large', False))
        c_n, c_star = outcome.counts
        published = PUBLISHED_COUNTS.get(n)
        return EnumerationSummarySerializer({
            'n': n,
            'chamber_count': c_n,
            'normal_count': c_star,
            'published': list(published) if published else None,
            'matches_published': (c_n, c_star) == published if published else None,
            'note': COUNT_NOTES.get(n, ''),
            'output': str(outcome.path),
            'run': outcome.run,
        }).data

    def render_text(self, result, **options):
        self.stdout.write(self.style.SUCCESS(
            f'✓ n={result["n"]}: c_n = {result["chamber_count"]}，c_n* = {result["normal_count"]}'))
        if result['published'] is not None:
            if result['matches_published']:
                self.stdout.write(self.style.SUCCESS(f'与已发表数值 {tuple(result["published"])} 一致'))
            else:
                self.stdout.write(self.style.WARNING(f'与已发表数值 {tuple(result["published"])} 不一致'))
        if result['note']:
            self.stdout.write(self.style.WARNING(result['note']))
        run = result['run']
        self.stdout.write(f'子树 {run["completed_count"]}/{run["total_tasks"]}，叶子 {run["leaf_count"]}，'
                          f'线性规划 {run["lp_calls"]} 次')
        self.stdout.write(f'输出文件: {result["output"]}')
