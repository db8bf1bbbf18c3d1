# Additive energy.
# Exact energy and difference-set statistics of partial-sum sets.

import itertools
import logging
import typing
from collections import Counter

import config
import numpy as np
from sequences import PartialSumSet
from utils import GuardError, get_energy_max_size

log = logging.getLogger(__name__)


class EnergyReport(typing.NamedTuple):
    set_size: int
    energy: int
    diff_support: int
    cs_lower_bound: int
    distinct_sums: int

    def as_dict(self) -> dict:
        return self._asdict()


def _as_sorted(P) -> np.ndarray:
    if isinstance(P, PartialSumSet):
        return P.sums
    return np.unique(np.asarray(list(P), dtype=np.int64))


# Multiset of positive differences p_j - p_i (i < j), sorted.
def _positive_differences(sums: np.ndarray) -> np.ndarray:
    m = len(sums)
    diffs = np.empty(m * (m - 1) // 2, dtype=np.int64)
    pos = 0
    for i in range(m - 1):
        row = sums[i + 1 :] - sums[i]
        diffs[pos : pos + len(row)] = row
        pos += len(row)
    diffs.sort()
    return diffs


# Run lengths m_t of each distinct positive difference t.
def _run_lengths(diffs: np.ndarray) -> np.ndarray:
    if len(diffs) == 0:
        return np.zeros(0, dtype=np.int64)
    ends = np.flatnonzero(diffs[1:] != diffs[:-1]) + 1
    bounds = np.concatenate(([0], ends, [len(diffs)]))
    return np.diff(bounds).astype(np.int64)


# E(P) = 2 * sum_t m_t^2 + |P|^2, with t = 0 and negative t folded in by symmetry.
def additive_energy(P, max_size: int | None = None) -> EnergyReport:
    sums = _as_sorted(P)
    size = len(sums)
    if size < 1:
        raise ValueError("Energy is undefined for an empty set")
    limit = get_energy_max_size() if max_size is None else max_size
    if size > limit:
        raise GuardError(
            f"energy limited to |P| <= {limit} ({8 * limit * (limit - 1) // 2 >> 20} MiB of differences), got {size}"
        )
    runs = _run_lengths(_positive_differences(sums))
    energy = 2 * int(np.dot(runs, runs)) + size * size
    diff_support = 2 * len(runs) + 1
    return EnergyReport(
        set_size=size,
        energy=energy,
        diff_support=diff_support,
        cs_lower_bound=size**4 // diff_support,
        distinct_sums=len(runs),
    )


# floor((|P|^4 / E - 1) / 2), a certified lower bound on |S(a)|.
def distinct_sums_from_energy(report: EnergyReport) -> int:
    if report.energy < 1:
        raise ValueError(f"Energy must be positive, got {report.energy}")
    return (report.set_size**4 - report.energy) // (2 * report.energy)


# Recount E(P) by enumeration and check E(P) = 2 * #{i<j, k<l : p_j-p_i = p_l-p_k} + |P|^2.
def energy_decomposition_check(P) -> bool:
    sums = [int(x) for x in _as_sorted(P)]
    size = len(sums)
    if size > config.DECOMPOSITION_MAX_SIZE:
        raise GuardError(
            f"decomposition check limited to |P| <= {config.DECOMPOSITION_MAX_SIZE}, got {size}"
        )
    if size <= config.QUADRUPLE_LOOP_MAX_SIZE:
        quadruples = sum(
            1
            for x, y, z, w in itertools.product(sums, repeat=4)
            if x - y == z - w
        )
        pairs = list(itertools.combinations(range(size), 2))
        matches = sum(
            1
            for (i, j), (k, l) in itertools.product(pairs, repeat=2)
            if sums[j] - sums[i] == sums[l] - sums[k]
        )
    else:
        ordered = Counter(x - y for x in sums for y in sums)
        quadruples = sum(r * r for r in ordered.values())
        positive = Counter(y - x for x, y in itertools.combinations(sums, 2))
        matches = sum(r * r for r in positive.values())

    report = additive_energy(sums)
    ok = quadruples == report.energy == 2 * matches + size * size
    if not ok:
        log.warning(
            f"energy decomposition mismatch: direct {quadruples}, sorted {report.energy}, "
            f"pairs {matches}, |P| {size}"
        )
    return ok
