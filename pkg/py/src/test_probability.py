import math
import unittest
from fractions import Fraction

import probability
from utils import GuardError


class PmfTest(unittest.TestCase):
    def assertMasses(self, table, expected):
        self.assertListEqual([table.mass(k) for k in range(table.m + 1)], expected)

    def test_binomial_small(self):
        self.assertMasses(probability.binomial_pmf(2), [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)])
        self.assertMasses(
            probability.binomial_pmf(4), [Fraction(c, 16) for c in (1, 4, 6, 4, 1)]
        )

    def test_binomial_shape(self):
        for m in (1, 7, 30, 101):
            table = probability.binomial_pmf(m)
            self.assertTrue(table.is_exact())
            self.assertEqual(table.total(), 1)
            masses = [table.mass(k) for k in range(m + 1)]
            self.assertListEqual(masses, masses[::-1])
            peak = max(masses)
            self.assertEqual(masses[m // 2], peak)
            self.assertEqual(masses[(m + 1) // 2], peak)

    def test_floating_backend(self):
        table = probability.binomial_pmf(3000)
        self.assertFalse(table.is_exact())
        self.assertAlmostEqual(table.total(), 1.0, delta=1e-15)
        self.assertAlmostEqual(table.mass(10), table.mass(2990), delta=1e-300)
        exact = probability.binomial_pmf(500, exact=True)
        approx = probability.binomial_pmf(500, exact=False)
        for k in (200, 250, 300):
            self.assertAlmostEqual(approx.mass(k) / float(exact.mass(k)), 1.0, delta=1e-10)

    def test_max_mass(self):
        rows = probability.max_mass_check(400)
        self.assertTrue(all(row.ok for row in rows))
        self.assertEqual(rows[0].max_mass, Fraction(1, 2))

    def test_rademacher(self):
        one = probability.rademacher_sum_pmf(1)
        self.assertEqual(one.mass(1), Fraction(1, 2))
        self.assertEqual(one.mass(-1), Fraction(1, 2))
        self.assertEqual(one.mass(0), 0)
        two = probability.rademacher_sum_pmf(2)
        self.assertEqual(two.mass(2), Fraction(1, 4))
        self.assertEqual(two.mass(0), Fraction(1, 2))
        self.assertEqual(probability.rademacher_sum_pmf(6).mass(0), Fraction(20, 64))
        seven = probability.rademacher_sum_pmf(7)
        for s in range(-9, 10):
            self.assertEqual(seven.mass(s), seven.mass(-s))
            if (s + 7) % 2:
                self.assertEqual(seven.mass(s), 0)
        self.assertEqual(sum(seven.mass(s) for s in seven.support()), 1)

    def test_guards(self):
        with self.assertRaises(GuardError):
            probability.binomial_pmf(10**6 + 1)
        with self.assertRaises(GuardError):
            probability.binomial_pmf(5000, exact=True)


class LemmaTest(unittest.TestCase):
    def test_prob_divisible(self):
        for n in (1, 5, 40):
            self.assertEqual(probability.prob_divisible(n, 1), 1)
        self.assertEqual(probability.prob_divisible(4, 2), Fraction(1, 2))
        value = probability.prob_divisible(100, 7)
        self.assertLessEqual(value, Fraction(1, 7) + Fraction(1, 5))

    def test_prob_divisible_positive(self):
        for n in (10, 33, 60):
            table = probability.binomial_pmf(n)
            for m in range(1, n + 1):
                multiple = (n // (2 * m)) * m
                self.assertGreaterEqual(probability.prob_divisible(n, m), table.mass(multiple))
                self.assertGreater(probability.prob_divisible(n, m), 0)

    def test_floating_divisible(self):
        exact = probability.prob_divisible(1000, 9, exact=True)
        approx = probability.prob_divisible(1000, 9, exact=False)
        self.assertAlmostEqual(float(exact), approx, delta=1e-12)

    def test_lemma_grid(self):
        rows = probability.lemma_bound_check(60, 30)
        self.assertEqual(len(rows), 60 * 30)
        failures = [row for row in rows if not row.ok]
        self.assertListEqual(failures, [])
        for row in rows:
            self.assertLessEqual(float(row.probability), row.bound + 1e-12)

    def test_lemma_corners(self):
        rows = {(row.n, row.m): row for row in probability.lemma_bound_check(9, 3)}
        self.assertEqual(rows[(1, 2)].probability, Fraction(1, 2))
        self.assertTrue(rows[(1, 2)].ok)
        self.assertAlmostEqual(rows[(9, 3)].bound, 1.0)
        self.assertTrue(rows[(9, 3)].ok)

    def test_lemma_guard(self):
        with self.assertRaises(GuardError):
            probability.lemma_bound_check(2000, 1000)


if __name__ == "__main__":
    unittest.main()
