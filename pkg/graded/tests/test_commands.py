import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.tests.test_commands import run_json


class Gf2DimsCommandTests(SimpleTestCase):
    def test_pentagon_planar(self):
        payload = run_json('gf2dims', lv='1,1,1,1,1')
        self.assertEqual(payload['dims'], [1, 5, 1])
        self.assertEqual(payload['space'], 'mbar')
        self.assertEqual(payload['total'], 7)
        self.assertEqual(payload['euler_characteristic'], -3)
        self.assertEqual(payload['relations'], 'minimal-long')

    def test_pentagon_spatial(self):
        payload = run_json('gf2dims', lv='1,1,1,1,1', space='n', all_long=True)
        self.assertEqual(payload['dims'], [1, 0, 5, 0, 1])
        self.assertEqual(payload['relations'], 'all-long')

    def test_text_output(self):
        out = StringIO()
        call_command('gf2dims', lv='1,1,1,1,3', stdout=out)
        self.assertIn('(1, 1, 1)', out.getvalue())

    def test_empty_space_error(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('gf2dims', lv='1,1,1,1,6', json=True, stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)
        self.assertEqual(json.loads(out.getvalue())['error']['code'], 'empty_space')


class W1CommandTests(SimpleTestCase):
    def test_pentagon(self):
        payload = run_json('w1', lv='1,1,1,1,1')
        self.assertEqual(payload['w1'], 'R')
        self.assertTrue(payload['unique'])
        self.assertEqual(payload['alternatives'], [])
        self.assertEqual(payload['quotient_dims'], [1, 4, 0])

    def test_n4_lists_all_solutions(self):
        payload = run_json('w1', lv='1,1,1,2')
        self.assertFalse(payload['unique'])
        self.assertEqual(payload['solution_count'], 2)
        self.assertEqual(sorted([payload['w1'], *payload['alternatives']]), ['0', 'R'])

    def test_text_output_warns_when_ambiguous(self):
        out = StringIO()
        call_command('w1', lv='1,2,2,2', stdout=out)
        self.assertIn('解不唯一', out.getvalue())
