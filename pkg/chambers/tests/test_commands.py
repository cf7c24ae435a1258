import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings


def run_json(name, **options):
    out = StringIO()
    call_command(name, json=True, stdout=out, stderr=StringIO(), **options)
    return json.loads(out.getvalue())


class CommandTestCase(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        override = override_settings(CHAMBER_DB_DIR=Path(self.tmp.name))
        override.enable()
        self.addCleanup(override.disable)


class EnumerateCommandTests(CommandTestCase):
    def test_enumerate_five(self):
        payload = run_json('enumerate', n=5, split_depth=2)
        self.assertEqual(payload['chamber_count'], 7)
        self.assertEqual(payload['normal_count'], 2)
        self.assertTrue(payload['matches_published'])
        self.assertEqual(payload['run']['status'], 'complete')
        self.assertTrue(Path(payload['output']).exists())

    def test_custom_output_path(self):
        out = Path(self.tmp.name) / 'nested' / 'four.jsonl'
        run_json('enumerate', n=4, out=str(out))
        self.assertEqual(len(out.read_text(encoding='utf-8').splitlines()), 3)

    def test_time_limit_exits_with_code_2(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('enumerate', n=6, split_depth=3, time_limit=0, json=True, stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertEqual(json.loads(out.getvalue())['error']['code'], 'resource_abort')

    def test_too_large_without_flag(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('enumerate', n=12, stdout=StringIO(), stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)


class TableCommandTests(CommandTestCase):
    def test_table_to_six(self):
        payload = run_json('table', n_to=6)
        self.assertEqual([row['c_n'] for row in payload['rows']], [2, 3, 7, 21])
        self.assertEqual([row['c_n_star'] for row in payload['rows']], [1, 1, 2, 7])

    def test_text_and_xlsx(self):
        xlsx = Path(self.tmp.name) / 'table.xlsx'
        out = StringIO()
        call_command('table', n_to=4, xlsx=str(xlsx), stdout=out)
        self.assertIn('c_n*', out.getvalue())
        self.assertTrue(xlsx.exists())
        self.assertGreater(xlsx.stat().st_size, 0)


class SampleCommandTests(SimpleTestCase):
    def test_json(self):
        payload = run_json('sample_normal', n=6, samples=5000, seed=3)
        self.assertEqual(payload['samples'], 5000)
        self.assertEqual(payload['bound'], '17496')
        again = run_json('sample_normal', n=6, samples=5000, seed=3)
        self.assertEqual(payload['nonnormal'], again['nonnormal'])
