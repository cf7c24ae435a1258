from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import LengthVectorError
from core.lengths import LengthVector, format_rational, parse_rational, permute_bitset


class ParseRationalTests(SimpleTestCase):
    def test_accepts_fraction_strings_and_integers(self):
        self.assertEqual(parse_rational('3/4'), Fraction(3, 4))
        self.assertEqual(parse_rational(' 2 '), Fraction(2))
        self.assertEqual(parse_rational(5), Fraction(5))
        self.assertEqual(parse_rational('1.5'), Fraction(3, 2))

    def test_rejects_garbage(self):
        for token in ('', 'abc', '1/0', True, None):
            with self.subTest(token=token):
                with self.assertRaises(LengthVectorError):
                    parse_rational(token)

    def test_format_is_exact(self):
        self.assertEqual(format_rational(Fraction(6, 4)), '3/2')
        self.assertEqual(format_rational(Fraction(4, 2)), '2')


class LengthVectorTests(SimpleTestCase):
    def test_parse_comma_list_and_json_array(self):
        a = LengthVector.parse('1/2,1,3/2')
        b = LengthVector.parse('["1/2", "1", "3/2"]')
        self.assertEqual(a, b)
        self.assertEqual(a.n, 3)
        self.assertEqual(a.total, Fraction(3))

    def test_rejects_non_positive_entries(self):
        with self.assertRaises(LengthVectorError):
            LengthVector.parse('1,0,1')
        with self.assertRaises(LengthVectorError):
            LengthVector.parse('1,-1,1')

    def test_rejects_n_out_of_range(self):
        with self.assertRaises(LengthVectorError):
            LengthVector.parse('1,1')
        with self.assertRaises(LengthVectorError):
            LengthVector.parse(','.join(['1'] * 6), max_n=5)

    def test_sorted_with_permutation_is_stable(self):
        lv = LengthVector.parse('3,1,2,1')
        ordered, perm = lv.sorted_with_permutation()
        self.assertEqual(ordered.as_strings(), ['1', '1', '2', '3'])
        self.assertEqual(perm, (2, 4, 3, 1))
        self.assertTrue(ordered.is_ordered())
        self.assertFalse(lv.is_ordered())

    def test_integer_weights_are_coprime(self):
        lv = LengthVector.parse('1/2,1/3,1/6')
        self.assertEqual(lv.integer_weights(), [3, 2, 1])
        self.assertEqual(LengthVector.parse('4,6,8').integer_weights(), [2, 3, 4])

    def test_normalized_sums_to_one(self):
        lv = LengthVector.parse('1,2,3,4').normalized()
        self.assertEqual(lv.total, 1)
        self.assertEqual(lv.entries[0], Fraction(1, 10))

    def test_permute_bitset(self):
        # 1→2, 2→3, 3→1
        self.assertEqual(permute_bitset(0b011, (2, 3, 1)), 0b110)
        self.assertEqual(permute_bitset(0, (2, 3, 1)), 0)
