# Generated by Django 5.2.7 on 2026-10-17 09:30

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='EnumerationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveSmallIntegerField(verbose_name='多边形边数')),
                ('output_path', models.CharField(max_length=500, verbose_name='输出文件')),
                ('status', models.CharField(choices=[('running', '进行中'), ('complete', '已完成'), ('aborted', '已中止')], default='running', max_length=20)),
                ('split_depth', models.PositiveSmallIntegerField(default=6, verbose_name='拆分深度')),
                ('partial_lp', models.BooleanField(default=False, verbose_name='部分候选线性规划')),
                ('completed_tasks', models.JSONField(blank=True, default=list, verbose_name='已完成子树')),
                ('total_tasks', models.PositiveIntegerField(default=0)),
                ('chamber_count', models.PositiveIntegerField(default=0)),
                ('normal_count', models.PositiveIntegerField(default=0)),
                ('leaf_count', models.PositiveBigIntegerField(default=0)),
                ('lp_calls', models.PositiveBigIntegerField(default=0)),
                ('started_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('finished_at', models.DateTimeField(blank=True, null=True)),
            ],
            options={
                'db_table': 'chamber_enumeration_run',
                'ordering': ['-started_at', '-id'],
                'indexes': [models.Index(fields=['n', 'status'], name='enum_run_n_status_idx')],
            },
        ),
    ]
