import json
from io import StringIO

from django.core.management import call_command
from django.test import SimpleTestCase


def run_json(name, **options):
    out = StringIO()
    call_command(name, json=True, stdout=out, stderr=StringIO(), **options)
    return json.loads(out.getvalue())


class BettiCommandTests(SimpleTestCase):
    def test_pair_long_case(self):
        payload = run_json('betti', lv='1,1,3,3,3')
        self.assertEqual(payload['b'], [2, 4, 2])
        self.assertEqual(payload['case']['label'], 'pair_long')

    def test_small_n_has_no_case_row(self):
        payload = run_json('betti', lv='1,1,1,2')
        self.assertEqual(payload['b'], [1, 1])
        self.assertIsNone(payload['case'])

    def test_text_output(self):
        out = StringIO()
        call_command('betti', lv='1,1,1,1,1', stdout=out)
        self.assertIn('b = (1, 8, 1)', out.getvalue())


class PresentCommandTests(SimpleTestCase):
    def test_pentagon(self):
        payload = run_json('present', lv='1,1,1,1,1')
        self.assertEqual(payload['minimal_monomials'], ['0x3', '0x5', '0x6', '0x9', '0xa', '0xc'])
        self.assertEqual(payload['i_of_ell'], 5)
        self.assertEqual(payload['ranks'], [1, 4, 0])
        self.assertEqual(payload['defect_basis'], {})

    def test_single_wall_defect(self):
        payload = run_json('present', lv='1,1,1,1,2')
        self.assertEqual(payload['defect_basis'], {'1': ['0x1', '0x2', '0x4', '0x8']})

    def test_defect_unavailable_is_reported(self):
        payload = run_json('present', lv='1,1,3,3,3')
        self.assertIsNone(payload['defect_basis'])
        self.assertTrue(payload['defect_note'])
