import random
from fractions import Fraction

from django.test import SimpleTestCase

from cohomology.services import CohomologyService
from core.exceptions import PreconditionError
from core.lengths import LengthVector
from core.subsets import SubsetClass, bitset, classify_subset, is_normal, signature


def lv(text):
    return LengthVector.parse(text)


def pairs(m):
    return frozenset(bitset([i, j]) for i in range(1, m + 1) for j in range(i + 1, m + 1))


class BalancedPresentationTests(SimpleTestCase):
    def setUp(self):
        self.service = CohomologyService()

    def test_pentagon(self):
        presentation = self.service.balanced_presentation(lv('1,1,1,1,1'))
        self.assertEqual(presentation.ideal.generators, pairs(4))
        self.assertEqual(presentation.first_killed, 5)
        self.assertEqual(presentation.ranks(), (1, 4, 0))
        self.assertEqual(presentation.generator_names, ['X1', 'X2', 'X3', 'X4'])

    def test_all_variables_killed(self):
        presentation = self.service.balanced_presentation(lv('1,1,1,2'))
        self.assertEqual(presentation.ideal.generators, frozenset({1, 2, 4}))
        self.assertEqual(presentation.first_killed, 1)
        self.assertEqual(presentation.ranks(), (1, 0))
        self.assertEqual(presentation.stripped().m, 0)

    def test_heavy_last_side(self):
        presentation = self.service.balanced_presentation(lv('1,1,1,1,3'))
        self.assertEqual(presentation.ideal.generators, frozenset({1, 2, 4, 8}))
        self.assertEqual(presentation.first_killed, 1)

    def test_top_must_be_short(self):
        for text in ('1,1,1,1,6', '1,1,1,1,4'):
            with self.subTest(lv=text):
                with self.assertRaises(PreconditionError) as ctx:
                    self.service.balanced_presentation(lv(text))
                self.assertEqual(ctx.exception.code, 'top_not_short')

    def test_degree_one_rank_is_first_killed_minus_one(self):
        rng = random.Random(19)
        for _ in range(200):
            n = rng.randint(4, 8)
            vector, _ = LengthVector(tuple(Fraction(rng.randint(1, 25)) for _ in range(n))).sorted_with_permutation()
            if classify_subset(vector, bitset([n])) != SubsetClass.SHORT:
                continue
            presentation = self.service.balanced_presentation(vector)
            self.assertEqual(presentation.ranks()[1], presentation.first_killed - 1)
            # X_j 属于理想 ⇔ j ≥ i(ℓ)
            for j in range(1, n):
                self.assertEqual(presentation.ideal.contains(1 << (j - 1)), j >= presentation.first_killed)

    def test_stripped_ideal_is_variable_free(self):
        stripped = self.service.balanced_presentation(lv('1,1,2,2,2,3')).stripped()
        self.assertTrue(stripped.variable_free)


class DefectBasisTests(SimpleTestCase):
    def setUp(self):
        self.service = CohomologyService()

    def test_generic_vector_has_empty_defect(self):
        self.assertTrue(self.service.defect_basis(lv('1,1,1,1,1')).empty)

    def test_single_wall(self):
        defect = self.service.defect_basis(lv('1,1,1,1,2'))
        self.assertEqual(defect.by_degree, {1: (1, 2, 4, 8)})
        self.assertEqual(defect.rank(1), 4)

    def test_equilateral_hexagon(self):
        defect = self.service.defect_basis(lv('1,1,1,1,1,1'))
        self.assertEqual(set(defect.by_degree), {2})
        self.assertEqual(frozenset(defect.by_degree[2]), pairs(5))

    def test_precondition_reported_distinctly(self):
        with self.assertRaises(PreconditionError) as ctx:
            self.service.defect_basis(lv('1,1,3,3,3'))
        self.assertEqual(ctx.exception.code, 'defect_hypothesis')

    def test_rank_matches_brute_force_on_single_walls(self):
        rng = random.Random(23)
        checked = 0
        while checked < 60:
            n = rng.randint(4, 6)
            vector, _ = LengthVector(tuple(Fraction(rng.randint(1, 8)) for _ in range(n))).sorted_with_permutation()
            sig = signature(vector)
            if sig.generic:
                continue
            try:
                defect = self.service.defect_basis(vector)
            except PreconditionError:
                continue
            checked += 1
            for size in range(n):
                expected = sum(
                    1 for mask in range(1 << (n - 1))
                    if mask.bit_count() == size
                    and classify_subset(vector, mask | (1 << (n - 1))) == SubsetClass.MEDIAN
                )
                self.assertEqual(defect.rank(size), expected)


class NormalViaCupTests(SimpleTestCase):
    def setUp(self):
        self.service = CohomologyService()

    def test_examples(self):
        self.assertTrue(self.service.normal_via_cup(lv('1,1,1,1,3')))
        self.assertFalse(self.service.normal_via_cup(lv('1,1,1,1,1')))
        self.assertFalse(self.service.normal_via_cup(lv('1,1,2,2,2,3')))

    def test_hypothesis(self):
        with self.assertRaises(PreconditionError) as ctx:
            self.service.normal_via_cup(lv('1,1,3,3,3'))
        self.assertEqual(ctx.exception.code, 'betti_hypothesis')

    def test_agrees_with_is_normal_on_generic_vectors(self):
        rng = random.Random(29)
        checked = 0
        while checked < 100:
            n = rng.randint(5, 8)
            vector = LengthVector(tuple(Fraction(2 * rng.randint(1, 20)) for _ in range(n - 1)) + (Fraction(1),))
            if not signature(vector).generic:
                continue
            b = self.service.betti(vector).b
            if b[0] != 1 or b[-1] != 1:
                continue
            checked += 1
            self.assertEqual(self.service.normal_via_cup(vector), is_normal(vector), str(vector))
