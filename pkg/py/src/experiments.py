# Experiments.
# Monte Carlo and exact expectations of the energy, and scans of |S(a)| / n^2.

import itertools
import logging
import math
import time
import typing
from fractions import Fraction

import config
import numpy as np
from cmds import run_ordered
from energy import additive_energy
from probability import binomial_pmf
from sequences import (
    Sequence,
    SequenceKind,
    count_distinct_sums,
    make_block,
    make_explicit,
    make_identity,
    make_permutation,
    make_prandom,
    make_rademacher,
    partial_sums,
)
from utils import GuardError, stream

log = logging.getLogger(__name__)


# One row of experiment output.
class ExperimentRecord(typing.NamedTuple):
    command: str
    params: dict
    statistic: str
    value: float
    stderr: float | None = None
    trials: int | None = None
    seed: int | None = None
    wall_ms: int = 0

    def as_dict(self, flat: bool = True) -> dict:
        head = {
            "command": self.command,
            "statistic": self.statistic,
            "value": self.value,
            "stderr": self.stderr,
            "trials": self.trials,
            "seed": self.seed,
        }
        if not flat:
            return {**head, "params": dict(self.params), "wall_ms": self.wall_ms}
        return {**head, **self.params, "wall_ms": self.wall_ms}


def _elapsed_ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


# Mean and standard error, the latter only for more than one sample.
def summarize(samples: typing.Sequence[float]) -> tuple[float, float | None]:
    values = np.asarray(samples, dtype=np.float64)
    mean = float(values.mean())
    if len(values) < 2:
        return mean, None
    return mean, float(values.std(ddof=1) / math.sqrt(len(values)))


# Build a sequence of the given kind from substream `index` of `seed`.
def build_sequence(
    kind: SequenceKind | str, n: int, params: dict, seed: int, index: int = 0
) -> Sequence:
    kind = SequenceKind(str(kind))
    if kind == SequenceKind.IDENTITY:
        return make_identity(n)
    if kind == SequenceKind.BLOCK:
        return make_block(n, int(params["b"]))
    if kind == SequenceKind.RADEMACHER:
        return make_rademacher(n, seed, rng=stream(seed, index))
    if kind == SequenceKind.PERMUTATION:
        return make_permutation(n, seed, rng=stream(seed, index))
    if kind == SequenceKind.PRANDOM:
        return make_prandom(n, float(params["p"]), seed, rng=stream(seed, index))
    if kind == SequenceKind.EXPLICIT:
        return make_explicit(params["values"], n)
    raise ValueError(f"Unknown sequence kind {kind}")


def _rademacher_energy(n: int, seed: int, index: int) -> int:
    a = make_rademacher(n, seed, rng=stream(seed, index))
    return additive_energy(partial_sums(a)).energy


class EnergyEstimate(typing.NamedTuple):
    n: int
    mean: float
    stderr: float | None
    ratio: float
    trials: int


# Average E(P(a)) over independent +-1 constructions, trial t drawn from substream t.
def mc_expected_energy(n: int, trials: int, seed: int, executor=None) -> EnergyEstimate:
    if trials < 1:
        raise ValueError(f"Need at least one trial, got {trials}")
    energies = run_ordered(executor, _rademacher_energy, [(n, seed, t) for t in range(trials)])
    mean, stderr = summarize(energies)
    log.info(f"mc energy n={n}: mean {mean} over {trials} trials")
    return EnergyEstimate(n, mean, stderr, mean / n**2, trials)


def _pattern_energy_total(n: int, prefix: tuple[int, ...]) -> int:
    base = 3 * np.arange(1, n + 1, dtype=np.int64)
    total = 0
    for rest in itertools.product((-1, 1), repeat=n - len(prefix)):
        values = base + np.asarray(prefix + rest, dtype=np.int64)
        total += additive_energy(partial_sums(make_explicit(values))).energy
    return total


# E[E(P(a))] over all 2^n sign patterns, exactly.
def exact_expected_energy(n: int, executor=None) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > config.EXHAUSTIVE_MAX_N:
        raise GuardError(f"exhaustive expectation limited to n <= {config.EXHAUSTIVE_MAX_N}")
    split = min(n, 4)
    prefixes = list(itertools.product((-1, 1), repeat=split))
    totals = run_ordered(executor, _pattern_energy_total, [(n, p) for p in prefixes])
    return Fraction(sum(totals), 1 << n)


def _triangular(x: int) -> int:
    return x * (x + 1) // 2


# E[E(P(a))] by linearity of expectation: for intervals I, J the event
# sum_I a = sum_J a has probability g(|I xor J|, 3 (sum J - sum I)).
def pmf_expected_energy(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > config.PMF_EXPECTATION_MAX_N:
        raise GuardError(f"pmf expectation limited to n <= {config.PMF_EXPECTATION_MAX_N}")
    intervals = [(i, j) for i in range(n) for j in range(i + 1, n + 1)]
    numerator = 0  # over 2^n
    for i, j in intervals:
        for k, l in intervals:
            overlap = max(0, min(j, l) - max(i, k))
            steps = (j - i) + (l - k) - 2 * overlap
            gap = 3 * ((_triangular(l) - _triangular(k)) - (_triangular(j) - _triangular(i)))
            if abs(gap) > steps or (gap + steps) % 2:
                continue
            row = binomial_pmf(steps, exact=True).numerators
            numerator += row[(gap + steps) // 2] << (n - steps)  # type: ignore
    return Fraction((n + 1) ** 2 << n, 1 << n) + Fraction(2 * numerator, 1 << n)


def _distinct_ratio_task(
    kind: str, n: int, params: dict, seed: int, index: int
) -> tuple[int, float, int]:
    start = time.perf_counter()
    a = build_sequence(kind, n, params, seed, index)
    count = count_distinct_sums(a)
    return count, count / n**2, _elapsed_ms(start)


# Per-rep and aggregated |S(a)| / n^2 records for every (n, params) setting.
def _distinct_records(
    command: str,
    kind: str,
    settings: list[tuple[int, dict]],
    seed: int,
    reps: int,
    executor=None,
    threshold: float | None = None,
) -> list[ExperimentRecord]:
    if reps < 1:
        raise ValueError(f"Need at least one rep, got {reps}")
    tasks = []
    for n, params in settings:
        for rep in range(reps):
            tasks.append((kind, n, params, seed, len(tasks)))
    results = run_ordered(executor, _distinct_ratio_task, tasks)

    records = []
    for group, (n, params) in enumerate(settings):
        first = group * reps
        chunk = results[first : first + reps]
        base = {"kind": kind, "n": n, **params}
        for rep, (count, ratio, wall_ms) in enumerate(chunk):
            records.append(
                ExperimentRecord(
                    command,
                    {**base, "rep": rep, "substream": first + rep, "distinct_sums": count},
                    "distinct_ratio",
                    ratio,
                    seed=seed,
                    wall_ms=wall_ms,
                )
            )
        ratios = [ratio for _, ratio, _ in chunk]
        mean, stderr = summarize(ratios)
        wall_ms = sum(ms for _, _, ms in chunk)
        substreams = f"{first}:{first + reps}"
        records.append(
            ExperimentRecord(
                command,
                {**base, "substreams": substreams},
                "distinct_ratio_mean",
                mean,
                stderr,
                reps,
                seed,
                wall_ms,
            )
        )
        if threshold is not None:
            fraction = sum(r >= threshold for r in ratios) / reps
            spread = math.sqrt(fraction * (1 - fraction) / reps) if reps > 1 else None
            records.append(
                ExperimentRecord(
                    command,
                    {**base, "substreams": substreams, "threshold": threshold},
                    "fraction_at_least",
                    fraction,
                    spread,
                    reps,
                    seed,
                    wall_ms,
                )
            )
    return records


def scan_distinct(
    kind: SequenceKind | str,
    n_list: list[int],
    params: dict,
    seed: int,
    reps: int,
    executor=None,
    threshold: float | None = None,
) -> list[ExperimentRecord]:
    settings = [(n, dict(params)) for n in n_list]
    return _distinct_records("scan", str(kind), settings, seed, reps, executor, threshold)


def permutation_records(n: int, reps: int, seed: int, executor=None) -> list[ExperimentRecord]:
    return _distinct_records("permutation", "permutation", [(n, {})], seed, reps, executor)


# Mean |S(a)| / n^2 over random permutations of [n].
def permutation_ratio(n: int, reps: int, seed: int, executor=None) -> float:
    return permutation_records(n, reps, seed, executor)[-1].value


# Exploratory |S(a)| / n^2 for p-random subsets of [n].
def prandom_scan(
    n: int, p_list: list[float], reps: int, seed: int, executor=None
) -> list[ExperimentRecord]:
    settings = [(n, {"p": p}) for p in p_list]
    return _distinct_records("prandom", "prandom", settings, seed, reps, executor)


def mc_energy_records(
    n_list: list[int], trials: int, seed: int, executor=None
) -> list[ExperimentRecord]:
    records = []
    for n in n_list:
        start = time.perf_counter()
        estimate = mc_expected_energy(n, trials, seed, executor)
        wall_ms = _elapsed_ms(start)
        params = {"n": n, "substreams": f"0:{trials}"}
        records.append(
            ExperimentRecord(
                "mc-energy", params, "energy_mean", estimate.mean, estimate.stderr, trials, seed, wall_ms
            )
        )
        scaled = None if estimate.stderr is None else estimate.stderr / n**2
        records.append(
            ExperimentRecord(
                "mc-energy", params, "energy_over_n2", estimate.ratio, scaled, trials, seed, wall_ms
            )
        )
    return records


EXPECTATION_METHODS = ("enumerate", "pmf")


def exact_energy_records(n_list: list[int], method: str, executor=None) -> list[ExperimentRecord]:
    records = []
    for n in n_list:
        start = time.perf_counter()
        if method == "enumerate":
            value = exact_expected_energy(n, executor)
        elif method == "pmf":
            value = pmf_expected_energy(n)
        else:
            raise ValueError(f"Unknown method {method}, expected one of {EXPECTATION_METHODS}")
        params = {"n": n, "method": method, "exact": f"{value.numerator}/{value.denominator}"}
        records.append(
            ExperimentRecord(
                "exact-energy", params, "expected_energy", float(value), wall_ms=_elapsed_ms(start)
            )
        )
    return records
