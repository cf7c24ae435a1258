"""
Walker 审计命令
使用方法: python manage.py audit --db data/chambers-6.jsonl [--threads 4] [--json]
          python manage.py audit --n 5
"""
from pathlib import Path

from chambers import storage
from chambers.services import EnumerationService
from core.exceptions import MalformedInputError
from core.management.base import PolySpaceCommand
from hodge.serializers import AuditReportSerializer
from hodge.services import HodgeService


class Command(PolySpaceCommand):
    help = '对房室数据库逐对检查规范化的平衡理想是否区分所有房室，并校验 Walker 重构的往返一致性'

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--db', help='房室数据库文件（chambers-<n>.jsonl[.gz]）')
        source.add_argument('--n', type=int, help='使用 CHAMBER_DB_DIR 中的数据库，不存在时先枚举')
        parser.add_argument('--threads', type=int, help='工作进程数（默认 POLYSPACE_WORKERS）')

    def compute(self, **options):
        if options.get('db'):
            records = storage.read_records(Path(options['db']))
            if not records:
                raise MalformedInputError(f'房室数据库为空: {options["db"]}', code='empty_db')
            n = records[0].n
        else:
            n = options['n']
            enumeration = EnumerationService(workers=options.get('threads'))
            records = enumeration.cached_records(n)
            if records is None:
                records = enumeration.enumerate_chambers(n).records
        report = HodgeService(workers=options.get('threads')).walker_audit(n, [r.witness for r in records])
        return AuditReportSerializer(report).data

    def render_text(self, result, **options):
        self.stdout.write(f'n = {result["n"]}，房室数 {result["chambers"]}')
        if result['collisions']:
            self.stdout.write(self.style.ERROR(f'M 层碰撞 {len(result["collisions"])} 对:'))
            for left, right in result['collisions']:
                self.stdout.write(f'  {left}  ~  {right}')
        else:
            self.stdout.write(self.style.SUCCESS('M 层: 规范化平衡理想区分全部房室'))
        for left, right in result['mbar_collisions']:
            self.stdout.write(self.style.WARNING(f'M̄ 层碰撞: {left}  ~  {right}'))
        self.stdout.write(f'Walker 往返: 检查 {result["round_trip_checked"]}，失败 {result["round_trip_failed"]}，'
                          f'跳过 {result["round_trip_skipped"]}')
