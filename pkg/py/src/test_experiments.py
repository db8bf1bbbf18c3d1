import concurrent.futures
import itertools
import math
import unittest
from fractions import Fraction

import experiments
import sequences
from bounds import CONSTANTS
from cmds import run_ordered
from energy import additive_energy
from utils import GuardError


def hand_expected_energy(n):
    total = 0
    for signs in itertools.product((-1, 1), repeat=n):
        values = [3 * i + s for i, s in enumerate(signs, start=1)]
        P = sequences.partial_sums(sequences.make_explicit(values)).sums.tolist()
        total += sum(1 for x, y, z, w in itertools.product(P, repeat=4) if x - y == z - w)
    return Fraction(total, 2**n)


def aggregate(records):
    return [r for r in records if r.statistic == "distinct_ratio_mean"]


class ExpectedEnergyTest(unittest.TestCase):
    def assertWithinErrors(self, estimate, exact, errors=3):
        self.assertIsNotNone(estimate.stderr)
        self.assertLessEqual(abs(estimate.mean - float(exact)), errors * estimate.stderr)

    def test_single_step(self):
        estimate = experiments.mc_expected_energy(1, 20, 5)
        self.assertEqual(estimate.mean, 6)
        self.assertEqual(estimate.stderr, 0)
        self.assertEqual(experiments.exact_expected_energy(1), 6)
        self.assertEqual(experiments.pmf_expected_energy(1), 6)

    def test_two_steps(self):
        self.assertEqual(experiments.exact_expected_energy(2), hand_expected_energy(2))
        self.assertEqual(experiments.exact_expected_energy(2), 15)
        self.assertEqual(experiments.exact_expected_energy(4), hand_expected_energy(4))

    def test_pmf_matches_enumeration(self):
        for n in range(1, 10):
            self.assertEqual(experiments.pmf_expected_energy(n), experiments.exact_expected_energy(n))

    def test_mc_against_exact(self):
        self.assertWithinErrors(
            experiments.mc_expected_energy(12, 4096, 0), experiments.exact_expected_energy(12)
        )

    def test_mc_against_exact_sixteen(self):
        exact = experiments.exact_expected_energy(16)
        self.assertEqual(exact, experiments.pmf_expected_energy(16))
        self.assertWithinErrors(experiments.mc_expected_energy(16, 10**5, 1), exact)

    def test_quadratic_growth(self):
        ratios = [experiments.mc_expected_energy(n, 64, 2).ratio for n in (250, 500, 1000, 2000)]
        self.assertLessEqual(max(ratios), 1.2 * ratios[0])

    def test_stderr_shrinks(self):
        few = experiments.mc_expected_energy(30, 256, 4).stderr
        many = experiments.mc_expected_energy(30, 1024, 4).stderr
        self.assertGreaterEqual(few / many, 2 / 1.5)
        self.assertLessEqual(few / many, 2 * 1.5)

    def test_guards(self):
        with self.assertRaises(GuardError):
            experiments.exact_expected_energy(17)
        with self.assertRaises(GuardError):
            experiments.pmf_expected_energy(41)
        with self.assertRaises(ValueError):
            experiments.mc_expected_energy(5, 0, 0)

    def test_records(self):
        records = experiments.mc_energy_records([8], 10, 3)
        self.assertListEqual([r.statistic for r in records], ["energy_mean", "energy_over_n2"])
        self.assertAlmostEqual(records[1].value, records[0].value / 64)
        exact = experiments.exact_energy_records([3], "pmf")[0]
        self.assertEqual(Fraction(exact.params["exact"]), experiments.exact_expected_energy(3))
        self.assertIsNone(exact.stderr)
        with self.assertRaises(ValueError):
            experiments.exact_energy_records([3], "guess")


class ScanTest(unittest.TestCase):
    def ratio(self, kind, n, params=None, seed=0, reps=1):
        return aggregate(experiments.scan_distinct(kind, [n], params or {}, seed, reps))[0].value

    def test_identity_decays(self):
        self.assertLess(self.ratio("identity", 4000), self.ratio("identity", 500))

    def test_rademacher_constant(self):
        self.assertGreaterEqual(self.ratio("rademacher", 10**4), CONSTANTS.c2_rough)

    def test_block_constant(self):
        self.assertGreaterEqual(self.ratio("block", 10**4, {"b": 100}), CONSTANTS.c3_rough)

    def test_record_layout(self):
        records = experiments.scan_distinct("rademacher", [50, 80], {}, 9, 3, threshold=0.1)
        self.assertEqual(len(records), 2 * (3 + 2))
        per_rep = [r for r in records if r.statistic == "distinct_ratio"]
        self.assertListEqual([r.params["substream"] for r in per_rep], list(range(6)))
        for record in records:
            self.assertTrue(math.isfinite(record.value))
            self.assertEqual(record.stderr is not None, record.trials is not None and record.trials > 1)
        first = per_rep[0]
        a = experiments.build_sequence("rademacher", 50, {}, 9, 0)
        self.assertEqual(first.params["distinct_sums"], sequences.count_distinct_sums(a))
        self.assertEqual(aggregate(records)[0].params["substreams"], "0:3")

    def test_deterministic(self):
        first = experiments.scan_distinct("prandom", [300], {"p": 0.4}, 12, 4)
        second = experiments.scan_distinct("prandom", [300], {"p": 0.4}, 12, 4)
        self.assertListEqual(
            [r._replace(wall_ms=0) for r in first], [r._replace(wall_ms=0) for r in second]
        )

    def test_executor_matches_inline(self):
        with concurrent.futures.ThreadPoolExecutor(max_workers=3) as executor:
            pooled = experiments.mc_expected_energy(10, 50, 3, executor)
            records = experiments.scan_distinct("permutation", [40], {}, 6, 5, executor)
        self.assertEqual(pooled, experiments.mc_expected_energy(10, 50, 3))
        inline = experiments.scan_distinct("permutation", [40], {}, 6, 5)
        self.assertListEqual(
            [r._replace(wall_ms=0) for r in records], [r._replace(wall_ms=0) for r in inline]
        )

    def test_run_ordered(self):
        tasks = [(i, i + 1) for i in range(20)]
        with concurrent.futures.ThreadPoolExecutor(max_workers=4) as executor:
            self.assertListEqual(run_ordered(executor, pow, tasks), run_ordered(None, pow, tasks))


class PermutationTest(unittest.TestCase):
    def test_small(self):
        self.assertEqual(experiments.permutation_ratio(1, 3, 0), 1.0)
        self.assertEqual(experiments.permutation_ratio(2, 4, 0), 0.75)

    def test_limit_constant(self):
        self.assertAlmostEqual(
            experiments.permutation_ratio(2000, 5, 0), CONSTANTS.permutation_limit, delta=0.02
        )


class PrandomTest(unittest.TestCase):
    def test_reductions(self):
        full = aggregate(experiments.prandom_scan(300, [1.0, 0.0], 2, 4))
        identity = sequences.count_distinct_sums(sequences.make_identity(300)) / 300**2
        self.assertEqual(full[0].value, identity)
        self.assertEqual(full[1].value, 0.0)

    def test_finite_records(self):
        records = aggregate(experiments.prandom_scan(2000, [0.5], 10, 0))
        self.assertEqual(len(records), 1)
        self.assertTrue(math.isfinite(records[0].value))
        self.assertIsNotNone(records[0].stderr)
        self.assertTrue(math.isfinite(records[0].stderr))
        self.assertEqual(records[0].trials, 10)


class RecordTest(unittest.TestCase):
    def test_as_dict(self):
        record = experiments.ExperimentRecord("scan", {"n": 5, "kind": "identity"}, "ratio", 0.5)
        flat = record.as_dict()
        self.assertEqual(flat["n"], 5)
        self.assertNotIn("params", flat)
        nested = record.as_dict(flat=False)
        self.assertDictEqual(nested["params"], {"n": 5, "kind": "identity"})

    def test_summarize(self):
        self.assertEqual(experiments.summarize([3.0]), (3.0, None))
        mean, stderr = experiments.summarize([1.0, 3.0])
        self.assertEqual(mean, 2.0)
        self.assertAlmostEqual(stderr, 1.0)

    def test_build_sequence(self):
        a = experiments.build_sequence("explicit", 10, {"values": [2, 5]}, 0)
        self.assertTupleEqual(a.values, (2, 5))
        self.assertEqual(experiments.build_sequence("block", 6, {"b": 3}, 0).values[2], 6)
        self.assertEqual(additive_energy(sequences.partial_sums(a)).energy, 15)


if __name__ == "__main__":
    unittest.main()
