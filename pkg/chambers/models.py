from django.db import models
from django.utils import timezone


class RunStatus(models.TextChoices):
    """枚举任务状态"""
    RUNNING = 'running', '进行中'
    COMPLETE = 'complete', '已完成'
    ABORTED = 'aborted', '已中止'


class EnumerationRun(models.Model):
    """一次房室枚举的断点记录，--resume 时据此跳过已完成的子树"""
    n = models.PositiveSmallIntegerField(verbose_name='多边形边数')
    output_path = models.CharField(max_length=500, verbose_name='输出文件')
    status = models.CharField(max_length=20, choices=RunStatus.choices, default=RunStatus.RUNNING)
    split_depth = models.PositiveSmallIntegerField(default=6, verbose_name='拆分深度')
    partial_lp = models.BooleanField(default=False, verbose_name='部分候选线性规划')
    completed_tasks = models.JSONField(default=list, blank=True, verbose_name='已完成子树')
    total_tasks = models.PositiveIntegerField(default=0)
    chamber_count = models.PositiveIntegerField(default=0)
    normal_count = models.PositiveIntegerField(default=0)
    leaf_count = models.PositiveBigIntegerField(default=0)
    lp_calls = models.PositiveBigIntegerField(default=0)
    started_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)
    finished_at = models.DateTimeField(null=True, blank=True)

    class Meta:
        db_table = 'chamber_enumeration_run'
        ordering = ['-started_at', '-id']
        indexes = [
            models.Index(fields=['n', 'status'], name='enum_run_n_status_idx'),
        ]

    def __str__(self):
        return f'n={self.n} {self.get_status_display()} ({len(self.completed_tasks)}/{self.total_tasks})'

    def record_task(self, key: str, chambers: int, leaves: int, lp_calls: int) -> None:
        self.completed_tasks = list(self.completed_tasks) + [key]
        self.chamber_count += chambers
        self.leaf_count += leaves
        self.lp_calls += lp_calls
        self.save(update_fields=['completed_tasks', 'chamber_count', 'leaf_count', 'lp_calls', 'updated_at'])

    def finish(self, status: str, chamber_count: int = None, normal_count: int = None) -> None:
        self.status = status
        if chamber_count is not None:
            self.chamber_count = chamber_count
        if normal_count is not None:
            self.normal_count = normal_count
        self.finished_at = timezone.now()
        self.save()
