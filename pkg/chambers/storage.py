"""
房室数据库：JSON-lines 文件，每行一条房室记录，文件名以 .gz 结尾时使用 gzip
"""
import gzip
import json
import logging
from pathlib import Path
from typing import Iterable, List

from rest_framework.renderers import JSONRenderer

from core.exceptions import MalformedInputError

from .realizability import ChamberRecord
from .serializers import ChamberRecordSerializer

logger = logging.getLogger(__name__)


def _open(path: Path, mode: str):
    if path.suffix == '.gz':
        return gzip.open(path, mode + 't', encoding='utf-8')
    return open(path, mode, encoding='utf-8')


def encode_record(record: ChamberRecord) -> str:
    return JSONRenderer().render(ChamberRecordSerializer(record).data).decode('utf-8')


def append_records(path: Path, records: Iterable[ChamberRecord]) -> int:
    """追加写入，返回写入条数；只允许单一写入者（主进程）调用"""
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with _open(path, 'a') as fh:
        for record in records:
            fh.write(encode_record(record) + '\n')
            count += 1
    return count


def truncate(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with _open(path, 'w'):
        pass


def read_records(path: Path) -> List[ChamberRecord]:
    if not path.exists():
        raise MalformedInputError(f'房室数据库不存在: {path}', code='db_not_found')
    records = []
    with _open(path, 'r') as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedInputError(f'{path} 第 {lineno} 行不是合法 JSON: {exc.msg}') from exc
            serializer = ChamberRecordSerializer(data=data)
            if not serializer.is_valid():
                raise MalformedInputError(f'{path} 第 {lineno} 行记录格式错误: {serializer.errors}')
            records.append(serializer.save())
    logger.info(f'读取房室数据库 {path}: {len(records)} 条记录')
    return records


def canonical_records(records: Iterable[ChamberRecord]) -> List[ChamberRecord]:
    """按签名去重并按规范全序排序"""
    unique = {}
    for record in records:
        unique.setdefault(record.signature, record)
    return sorted(unique.values(), key=lambda r: r.signature.sort_key())


def rewrite(path: Path, records: List[ChamberRecord]) -> None:
    """整体重写（先写临时文件再替换）"""
    tmp = path.with_name(path.name + '.tmp')
    if path.suffix == '.gz':
        tmp = path.with_name(path.stem + '.tmp.gz')
    truncate(tmp)
    append_records(tmp, records)
    tmp.replace(path)
