import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from django.conf import settings
from django.db import transaction

from cohomology.services import CohomologyService
from core.exceptions import LengthVectorError, ResourceAbort
from core.lengths import LengthVector
from core.subsets import is_normal

from . import storage
from .models import EnumerationRun, RunStatus
from .realizability import ChamberRecord, ChamberSignature
from .search import TaskResult, run_task, split_tasks

logger = logging.getLogger(__name__)

# 已发表的 (c_n, c_n*)
PUBLISHED_COUNTS: Dict[int, Tuple[int, int]] = {
    3: (2, 1),
    4: (3, 1),
    5: (7, 2),
    6: (21, 7),
    7: (135, 65),
    8: (2470, 1700),
    9: (175428, 151317),
}

COUNT_NOTES = {
    9: '文献正文称 n=9 时有 175429 个房室，表中为 175428；这里只报告实际枚举得到的数目',
}


@dataclass
class EnumerationOutcome:
    n: int
    records: List[ChamberRecord]
    run: EnumerationRun
    path: Path

    @property
    def counts(self) -> Tuple[int, int]:
        return count_normal(self.records)


def counts_as_normal(record: ChamberRecord) -> bool:
    # n=3 时非空的空间是两点，0 重上积不为零，按上同调判据不计入正规房室
    if record.n == 3 and record.betti[0] > 0:
        return False
    return record.normal


def count_normal(records: Iterable[ChamberRecord]) -> Tuple[int, int]:
    """返回 (c_n, c_n*)"""
    total = normal = 0
    for record in records:
        total += 1
        if counts_as_normal(record):
            normal += 1
    return total, normal


class EnumerationService:
    """房室枚举业务逻辑服务类"""

    def __init__(self, workers: Optional[int] = None, split_depth: Optional[int] = None,
                 partial_lp: bool = False, time_limit: Optional[float] = None):
        self.workers = max(1, workers or settings.POLYSPACE_WORKERS)
        self.split_depth = split_depth if split_depth is not None else settings.POLYSPACE_SPLIT_DEPTH
        self.partial_lp = partial_lp
        self.time_limit = time_limit
        self.cohomology = CohomologyService()

    def default_path(self, n: int, compress: Optional[bool] = None) -> Path:
        compress = settings.POLYSPACE_GZIP if compress is None else compress
        suffix = '.jsonl.gz' if compress else '.jsonl'
        return Path(settings.CHAMBER_DB_DIR) / f'chambers-{n}{suffix}'

    def check_n(self, n: int, allow_large: bool = False) -> None:
        cap = settings.POLYSPACE_MAX_N if allow_large else settings.POLYSPACE_ENUM_MAX_N
        if not 3 <= n <= cap:
            hint = '' if allow_large else '（更大的 n 需加 --allow-large）'
            raise LengthVectorError(f'枚举要求 3 ≤ n ≤ {cap}，实际 n={n}{hint}', code='n_out_of_range')

    def build_record(self, n: int, masks: Iterable[int], witness: Iterable[int], margin: str) -> ChamberRecord:
        lv = LengthVector(tuple(Fraction(v) for v in witness))
        return ChamberRecord(
            signature=ChamberSignature(n=n, short_with_n=frozenset(masks)),
            witness=lv,
            margin=Fraction(margin),
            normal=is_normal(lv),
            betti=self.cohomology.betti(lv).b,
        )

    def _results(self, jobs: List[Tuple[int, str, bool]]) -> Iterator[TaskResult]:
        if self.workers == 1:
            for job in jobs:
                yield run_task(job)
            return
        with Pool(processes=self.workers) as pool:
            for result in pool.imap_unordered(run_task, jobs):
                yield result

    def _start_run(self, n: int, path: Path, tasks: List[str], resume: bool) -> EnumerationRun:
        if resume:
            run = (EnumerationRun.objects
                   .filter(n=n, output_path=str(path))
                   .exclude(status=RunStatus.COMPLETE)
                   .first())
            if run and run.split_depth == self.split_depth and path.exists():
                logger.info(f'断点续跑: n={n}，已完成 {len(run.completed_tasks)}/{run.total_tasks} 个子树')
                run.status = RunStatus.RUNNING
                run.save(update_fields=['status', 'updated_at'])
                return run
            logger.warning(f'未找到可续跑的记录（n={n}, {path}），重新开始')
        storage.truncate(path)
        return EnumerationRun.objects.create(
            n=n,
            output_path=str(path),
            split_depth=self.split_depth,
            partial_lp=self.partial_lp,
            total_tasks=len(tasks),
        )

    def enumerate_chambers(self, n: int, path: Optional[Path] = None, resume: bool = False,
                           allow_large: bool = False) -> EnumerationOutcome:
        """
        枚举 Σ_n 轨道代表（每个房室一个有序签名）
        每完成一个子树即追加写入并记录断点；超时则标记中止并抛出 ResourceAbort
        """
        self.check_n(n, allow_large)
        path = Path(path) if path else self.default_path(n)
        tasks = split_tasks(n, self.split_depth)
        run = self._start_run(n, path, tasks, resume)
        done = set(run.completed_tasks)
        jobs = [(n, key, self.partial_lp) for key in tasks if key not in done]
        logger.info(f'开始枚举 n={n}: 共 {len(tasks)} 个子树，待完成 {len(jobs)} 个，进程数 {self.workers}')

        started = time.monotonic()
        try:
            for result in self._results(jobs):
                records = [self.build_record(n, *found) for found in result.chambers]
                with transaction.atomic():
                    storage.append_records(path, records)
                    run.record_task(result.key, len(records), result.leaves, result.lp_calls)
                if self.time_limit is not None and time.monotonic() - started > self.time_limit:
                    if len(run.completed_tasks) < len(tasks):
                        raise ResourceAbort(
                            f'达到时间上限 {self.time_limit}s，已完成 {len(run.completed_tasks)}/{len(tasks)} 个子树，'
                            f'可用 --resume 继续')
        except ResourceAbort:
            run.finish(RunStatus.ABORTED)
            logger.warning(f'枚举中止: n={n}, 断点已保存到运行记录 #{run.pk}')
            raise
        except Exception:
            run.finish(RunStatus.ABORTED)
            logger.error(f'枚举失败: n={n}', exc_info=True)
            raise

        records = storage.canonical_records(storage.read_records(path))
        storage.rewrite(path, records)
        total, normal = count_normal(records)
        run.finish(RunStatus.COMPLETE, chamber_count=total, normal_count=normal)
        logger.info(f'枚举完成: n={n}, c_n={total}, c_n*={normal}, 线性规划 {run.lp_calls} 次，输出 {path}')
        return EnumerationOutcome(n=n, records=records, run=run, path=path)

    def cached_records(self, n: int, path: Optional[Path] = None) -> Optional[List[ChamberRecord]]:
        """已完成的数据库直接读取，否则返回 None"""
        path = Path(path) if path else self.default_path(n)
        complete = EnumerationRun.objects.filter(n=n, output_path=str(path), status=RunStatus.COMPLETE).exists()
        if complete and path.exists():
            return storage.canonical_records(storage.read_records(path))
        return None

    def table(self, n_from: int, n_to: int, allow_large: bool = False) -> List[dict]:
        """复现 c_n / c_n* 表：优先使用已完成的数据库"""
        rows = []
        for n in range(n_from, n_to + 1):
            self.check_n(n, allow_large)
            records = self.cached_records(n)
            source = 'cache'
            if records is None:
                records = self.enumerate_chambers(n, allow_large=allow_large).records
                source = 'enumerated'
            c_n, c_star = count_normal(records)
            published = PUBLISHED_COUNTS.get(n)
            rows.append({
                'n': n,
                'c_n': c_n,
                'c_n_star': c_star,
                'published_c_n': published[0] if published else None,
                'published_c_n_star': published[1] if published else None,
                'matches_published': (c_n, c_star) == published if published else None,
                'source': source,
                'note': COUNT_NOTES.get(n, ''),
            })
        return rows
