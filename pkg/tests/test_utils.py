from fractions import Fraction
from unittest import TestCase

from sigma_lab.logs import configure_logging
from sigma_lab.utils import *


class TestBits(TestCase):

    def test_iter_bits(self):
        self.assertEqual(list(iter_bits(0b101001)), [0, 3, 5])
        self.assertEqual(list(iter_bits(0)), [])
        self.assertEqual(list(iter_bits(1 << 100)), [100])

    def test_bitmask(self):
        self.assertEqual(bitmask([0, 3, 5]), 0b101001)
        self.assertEqual(bitmask([]), 0)

    def test_lowest_bit(self):
        self.assertEqual(lowest_bit(0b1100), 2)
        with self.assertRaises(ValueError):
            lowest_bit(0)


class TestFormatting(TestCase):

    def test_format_number(self):
        self.assertEqual(format_number(Fraction(12, 5)), "12/5")
        self.assertEqual(format_number(Fraction(4, 2)), "2")
        self.assertEqual(format_number(3), "3")
        self.assertEqual(format_number(2.0000000000001), "2")
        self.assertEqual(format_number(0.5), "0.5")
        self.assertEqual(format_number(-1e-17), "0")

    def test_format_values(self):
        self.assertEqual(format_values([5.0, 1.0, 0.0]), "5, 1, 0")

    def test_fraction_to_json(self):
        self.assertEqual(fraction_to_json(Fraction(3, 2)), "3/2")
        self.assertEqual(fraction_to_json(Fraction(6, 3)), 2)
        self.assertEqual(fraction_to_json(7), 7)


class TestLogging(TestCase):

    def test_levels(self):
        configure_logging("info")
        configure_logging("WARNING")
        with self.assertRaises(ValueError):
            configure_logging("LOUD")
