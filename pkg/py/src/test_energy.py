import itertools
import unittest

import energy
import sequences
from utils import GuardError


def quadruple_count(values):
    return sum(1 for x, y, z, w in itertools.product(values, repeat=4) if x - y == z - w)


def sample_sets():
    yield [0]
    yield [0, 1]
    yield [0, 1, 3, 7]
    yield [0, 1, 3, 6, 10]
    yield [-5, 2, 3, 11, 40]
    for a in (
        sequences.make_identity(30),
        sequences.make_rademacher(40, 3),
        sequences.make_block(45, 6),
        sequences.make_permutation(35, 8),
        sequences.make_prandom(80, 0.4, 2),
    ):
        yield sequences.partial_sums(a).sums.tolist()


class EnergyTest(unittest.TestCase):
    def assertEnergy(self, values, expected):
        self.assertEqual(energy.additive_energy(values).energy, expected)

    def test_tiny_sets(self):
        self.assertEnergy([0, 1], 6)
        self.assertEnergy([0], 1)
        report = energy.additive_energy([0, 1])
        self.assertEqual(report.diff_support, 3)
        self.assertEqual(report.distinct_sums, 1)

    def test_identity_four(self):
        P = sequences.partial_sums(sequences.make_identity(4))
        report = energy.additive_energy(P)
        self.assertEqual(report.energy, quadruple_count(P.sums.tolist()))
        pairs = list(itertools.combinations(P.sums.tolist(), 2))
        matches = sum(1 for (a, b), (c, d) in itertools.product(pairs, repeat=2) if b - a == d - c)
        self.assertEqual(report.energy, 2 * matches + 25)

    def test_sidon(self):
        report = energy.additive_energy([0, 1, 3, 7])
        m = 4
        self.assertEqual(report.energy, 2 * m * m - m)
        bound = energy.distinct_sums_from_energy(report)
        self.assertLessEqual(bound, m * (m - 1) // 2)

    def test_lower_bound_from_energy(self):
        self.assertEqual(energy.distinct_sums_from_energy(energy.additive_energy([0, 1])), 0)
        for values in sample_sets():
            report = energy.additive_energy(values)
            self.assertLessEqual(
                energy.distinct_sums_from_energy(report), (report.diff_support - 1) // 2
            )

    def test_cauchy_schwarz(self):
        for values in sample_sets():
            report = energy.additive_energy(values)
            size = len(set(values))
            self.assertGreaterEqual(report.energy * report.diff_support, size**4)
            self.assertGreaterEqual(report.energy, report.cs_lower_bound)
            self.assertEqual(report.diff_support % 2, 1)
            self.assertGreaterEqual(report.energy, size * size)

    def test_invariance(self):
        for values in sample_sets():
            base = energy.additive_energy(values).energy
            self.assertEqual(energy.additive_energy([v + 17 for v in values]).energy, base)
            self.assertEqual(energy.additive_energy([9 - v for v in values]).energy, base)
            self.assertEqual(energy.additive_energy([5 * v for v in values]).energy, base)

    def test_matches_sieve(self):
        for a in (sequences.make_rademacher(120, 1), sequences.make_block(150, 9)):
            report = energy.additive_energy(sequences.partial_sums(a))
            self.assertEqual(report.distinct_sums, sequences.count_distinct_sums(a))

    def test_decomposition(self):
        self.assertTrue(energy.energy_decomposition_check([0]))
        self.assertTrue(energy.energy_decomposition_check([0, 1]))
        for n in (5, 10, 20, 50):
            for a in (
                sequences.make_identity(n),
                sequences.make_rademacher(n, n),
                sequences.make_block(n, 3),
            ):
                self.assertTrue(energy.energy_decomposition_check(sequences.partial_sums(a)))

    def test_guards(self):
        with self.assertRaises(GuardError):
            energy.additive_energy(range(10), max_size=5)
        with self.assertRaises(GuardError):
            energy.energy_decomposition_check(range(401))
        with self.assertRaises(ValueError):
            energy.additive_energy([])


if __name__ == "__main__":
    unittest.main()
