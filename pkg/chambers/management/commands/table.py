"""
复现 c_n / c_n* 表
使用方法: python manage.py table --to 7 [--from 3] [--xlsx table.xlsx] [--json]
"""
from io import BytesIO
from pathlib import Path

import pandas as pd

from chambers.serializers import TableRowSerializer
from chambers.services import EnumerationService
from core.management.base import PolySpaceCommand

COLUMNS = {
    'n': 'n',
    'c_n': 'c_n',
    'c_n_star': 'c_n*',
    'published_c_n': '文献 c_n',
    'published_c_n_star': '文献 c_n*',
    'matches_published': '一致',
    'source': '来源',
}


class Command(PolySpaceCommand):
    help = '输出房室数 c_n 与正规房室数 c_n*，优先读取已完成的数据库，否则现场枚举'

    def add_arguments(self, parser):
        parser.add_argument('--from', dest='n_from', type=int, default=3, help='起始 n（默认 3）')
        parser.add_argument('--to', dest='n_to', type=int, required=True, help='终止 n')
        parser.add_argument('--threads', type=int, help='枚举时的工作进程数')
        parser.add_argument('--allow-large', action='store_true', help='允许超过默认上限的 n')
        parser.add_argument('--xlsx', help='同时导出 Excel 文件')

    def compute(self, **options):
        service = EnumerationService(workers=options.get('threads'))
        rows = service.table(options['n_from'], options['n_to'], allow_large=options.get('allow_large', False))
        if options.get('xlsx'):
            self._export(rows, Path(options['xlsx']))
        return {'rows': TableRowSerializer(rows, many=True).data}

    def _frame(self, rows):
        df = pd.DataFrame(rows, columns=list(COLUMNS))
        return df.rename(columns=COLUMNS)

    def _export(self, rows, path: Path):
        output = BytesIO()
        with pd.ExcelWriter(output, engine='openpyxl') as writer:
            self._frame(rows).to_excel(writer, index=False, sheet_name='房室数')
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(output.getvalue())

    def render_text(self, result, **options):
        rows = result['rows']
        self.stdout.write(self._frame(rows).to_string(index=False))
        for row in rows:
            if row['note']:
                self.stdout.write(self.style.WARNING(f'n={row["n"]}: {row["note"]}'))
