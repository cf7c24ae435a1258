from fractions import Fraction
from itertools import combinations_with_replacement

from django.test import SimpleTestCase

from chambers.search import run_task
from cohomology.services import BalancedPresentation, CohomologyService, DefectBasis
from core.exceptions import MalformedInputError, PreconditionError
from core.lengths import LengthVector
from core.subsets import bitset, signature
from hodge.ideals import MonomialIdeal
from hodge.services import HodgeService


def lv(text):
    return LengthVector.parse(text)


def all_witnesses(n):
    return [LengthVector(tuple(Fraction(v) for v in witness)) for _, witness, _ in run_task((n, '', False)).chambers]


class WalkerRecoverTests(SimpleTestCase):
    def setUp(self):
        self.service = HodgeService(workers=1)
        self.cohomology = CohomologyService()

    def test_pentagon(self):
        vector = lv('1,1,1,1,1')
        recovered = self.service.walker_recover(self.cohomology.balanced_presentation(vector))
        self.assertEqual(recovered, signature(vector))
        self.assertEqual(recovered.short_with_n, frozenset({0, 1, 2, 4, 8}))

    def test_wall_with_defect(self):
        vector = lv('1,1,1,1,2')
        recovered = self.service.walker_recover(
            self.cohomology.balanced_presentation(vector), self.cohomology.defect_basis(vector))
        self.assertEqual(recovered, signature(vector))
        self.assertEqual(recovered.median_with_n, frozenset({1, 2, 4, 8}))
        self.assertEqual(recovered.short_with_n, frozenset({0}))

    def test_distinct_from_pentagon(self):
        recovered = self.service.walker_recover(self.cohomology.balanced_presentation(lv('1,1,1,1,3')))
        self.assertEqual(recovered.short_with_n, frozenset({0}))
        self.assertNotEqual(recovered, signature(lv('1,1,1,1,1')))

    def test_round_trip_on_chambers(self):
        for n in (4, 5, 6, 7):
            checked = 0
            for vector in all_witnesses(n):
                outcome = self.service.round_trip(vector)
                if outcome is None:
                    continue
                checked += 1
                self.assertTrue(outcome, f'lv={vector}')
            self.assertGreater(checked, 0, f'n={n}')

    def test_round_trip_on_single_wall_strata(self):
        checked = 0
        for n in (4, 5):
            seen = set()
            for values in combinations_with_replacement(range(1, 2 * n + 1), n):
                if sum(values) % 2:
                    continue
                vector = LengthVector(tuple(Fraction(v) for v in values))
                sig = signature(vector)
                if len(sig.median_with_n) != 1:
                    continue
                key = (sig.short_with_n, sig.median_with_n)
                if key in seen:
                    continue
                seen.add(key)
                outcome = self.service.round_trip(vector)
                if outcome is None:
                    continue
                checked += 1
                self.assertTrue(outcome, f'lv={values}')
        self.assertGreater(checked, 0)

    def test_round_trip_on_walls(self):
        self.assertTrue(self.service.round_trip(lv('1,1,1,1,2')))
        for text in ('1,1,1,2,3', '1,1,2,2,2', '2,2,3,3,4'):
            with self.subTest(lv=text):
                self.assertIn(self.service.round_trip(lv(text)), (True, None))

    def test_hypothesis_required(self):
        vector = lv('1,1,5,5,5')
        with self.assertRaises(PreconditionError) as ctx:
            self.service.walker_recover(self.cohomology.balanced_presentation(vector))
        self.assertEqual(ctx.exception.code, 'walker_hypothesis')
        self.assertIsNone(self.service.round_trip(vector))

    def test_complement_rule_violation(self):
        balanced = BalancedPresentation(n=5, ideal=MonomialIdeal(m=4, generators=frozenset({bitset([1, 2])})),
                                        first_killed=5)
        with self.assertRaises(MalformedInputError) as ctx:
            self.service.walker_recover(balanced)
        self.assertEqual(ctx.exception.code, 'complement_rule')

    def test_defect_inside_ideal(self):
        balanced = self.cohomology.balanced_presentation(lv('1,1,1,1,1'))
        defect = DefectBasis(n=5, by_degree={2: (bitset([1, 2]),)})
        with self.assertRaises(MalformedInputError) as ctx:
            self.service.walker_recover(balanced, defect)
        self.assertEqual(ctx.exception.code, 'defect_in_ideal')


class CompareTests(SimpleTestCase):
    def setUp(self):
        self.service = HodgeService(workers=1)

    def test_same_chamber(self):
        result = self.service.compare(lv('1,1,1,1,1'), lv('3,3,3,3,3'))
        self.assertEqual(result['verdict'], 'same chamber')
        self.assertIsNone(result['stage'])
        self.assertEqual([s['stage'] for s in result['stages']], ['gf2-dims', 'w1-quotient', 'signature'])

    def test_dims_distinguish(self):
        result = self.service.compare(lv('1,1,1,1,1'), lv('1,1,1,1,3'))
        self.assertEqual(result['verdict'], 'different chamber')
        self.assertEqual(result['stage'], 'gf2-dims')
        self.assertEqual(len(result['stages']), 1)

    def test_four_gons_only_differ_by_signature(self):
        result = self.service.compare(lv('1,1,1,2'), lv('1,2,2,2'))
        self.assertEqual(result['stage'], 'signature')
        self.assertTrue(result['stages'][0]['equal'])
        self.assertTrue(result['stages'][1]['skipped'])

    def test_strata(self):
        result = self.service.compare(lv('1,1,1,1,2'), lv('2,2,2,2,4'))
        self.assertEqual(result['verdict'], 'same stratum')
        result = self.service.compare(lv('1,1,1,1,2'), lv('1,1,1,1,1'))
        self.assertEqual(result['verdict'], 'different stratum')
        self.assertEqual(result['stage'], 'betti')
        self.assertEqual(result['stages'][0]['left'], [1, 4, 1])

    def test_defect_key(self):
        key = self.service.defect_key(lv('1,1,1,1,2'))
        self.assertEqual(key[0], 4)
        self.assertEqual(key[1], (3, 5, 6, 9, 10, 12))
        self.assertEqual(key[2], (1, 2, 4, 8))

    def test_mismatched_n(self):
        with self.assertRaises(PreconditionError) as ctx:
            self.service.compare(lv('1,1,1,1,1'), lv('1,1,1,2'))
        self.assertEqual(ctx.exception.code, 'mismatched_n')


class WalkerAuditTests(SimpleTestCase):
    def setUp(self):
        self.service = HodgeService(workers=1)

    def test_four_gons(self):
        report = self.service.walker_audit(4, all_witnesses(4))
        self.assertEqual(report.chambers, 3)
        self.assertEqual(report.collisions, [])
        self.assertEqual(len(report.mbar_collisions), 1)
        self.assertEqual(report.signature_collisions, [])
        self.assertEqual(report.round_trip_failed, 0)

    def test_five_to_seven_gons(self):
        for n, count in ((5, 7), (6, 21), (7, 135)):
            with self.subTest(n=n):
                report = self.service.walker_audit(n, all_witnesses(n))
                self.assertEqual(report.chambers, count)
                self.assertEqual(report.collisions, [])
                self.assertEqual(report.mbar_collisions, [])
                self.assertEqual(report.round_trip_failed, 0)
                self.assertGreater(report.round_trip_checked, 0)
                self.assertEqual(report.round_trip_checked + report.round_trip_skipped, count)
