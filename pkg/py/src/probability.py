# Probability.
# Exact binomial and Rademacher-sum mass functions, and the divisibility lemma check.

import functools
import logging
import math
import typing
from fractions import Fraction

import config
import numpy as np
from scipy import special
from utils import GuardError

log = logging.getLogger(__name__)


# Mass function of Binomial(m, 1/2). Exact tables store C(m, k) with denominator 2^m,
# floating tables store the masses directly.
class PmfTable(typing.NamedTuple):
    m: int
    numerators: tuple[int, ...] | None = None
    masses: np.ndarray | None = None

    def is_exact(self) -> bool:
        return self.numerators is not None

    def mass(self, k: int) -> Fraction | float:
        if k < 0 or k > self.m:
            return Fraction(0) if self.is_exact() else 0.0
        if self.numerators is not None:
            return Fraction(self.numerators[k], 1 << self.m)
        return float(self.masses[k])  # type: ignore

    def total(self) -> Fraction | float:
        if self.numerators is not None:
            return Fraction(sum(self.numerators), 1 << self.m)
        return math.fsum(self.masses)  # type: ignore

    def as_floats(self) -> np.ndarray:
        if self.numerators is not None:
            return np.array([float(self.mass(k)) for k in range(self.m + 1)])
        return self.masses  # type: ignore


# Mass function of a sum of m independent random signs, indexed by s in {-m, -m+2, ..., m}.
class RademacherPmf(typing.NamedTuple):
    table: PmfTable

    @property
    def m(self) -> int:
        return self.table.m

    def support(self) -> list[int]:
        return list(range(-self.m, self.m + 1, 2))

    def mass(self, s: int) -> Fraction | float:
        if abs(s) > self.m or (s + self.m) % 2:
            return self.table.mass(-1)
        return self.table.mass((s + self.m) // 2)


@functools.lru_cache(maxsize=None)
def _exact_row(m: int) -> tuple[int, ...]:
    row = [1]
    for k in range(m):
        row.append(row[-1] * (m - k) // (k + 1))
    return tuple(row)


@functools.lru_cache(maxsize=64)
def _float_row(m: int) -> np.ndarray:
    k = np.arange(m + 1)
    logs = (
        special.gammaln(m + 1)
        - special.gammaln(k + 1)
        - special.gammaln(m - k + 1)
        - m * math.log(2.0)
    )
    masses = np.exp(logs)
    masses /= math.fsum(masses)
    masses.setflags(write=False)
    return masses


def _check_steps(m: int):
    if m < 0:
        raise ValueError(f"Number of steps must be nonnegative, got {m}")
    if m > config.PMF_MAX_STEPS:
        raise GuardError(f"pmf limited to m <= {config.PMF_MAX_STEPS}, got {m}")


# Exact dyadic table up to EXACT_PMF_MAX_STEPS, log-gamma with compensated normalisation above.
def binomial_pmf(m: int, exact: bool | None = None) -> PmfTable:
    _check_steps(m)
    if exact is None:
        exact = m <= config.EXACT_PMF_MAX_STEPS
    if exact:
        if m > config.EXACT_PMF_MAX_STEPS:
            raise GuardError(
                f"exact pmf limited to m <= {config.EXACT_PMF_MAX_STEPS}, got {m}"
            )
        return PmfTable(m, numerators=_exact_row(m))
    return PmfTable(m, masses=_float_row(m))


def rademacher_sum_pmf(m: int, exact: bool | None = None) -> RademacherPmf:
    return RademacherPmf(binomial_pmf(m, exact))


# P(X = 0 mod m) for X ~ Binomial(n, 1/2).
def prob_divisible(n: int, m: int, exact: bool | None = None) -> Fraction | float:
    if m < 1:
        raise ValueError(f"Modulus must be a positive integer, got {m}")
    table = binomial_pmf(n, exact)
    if table.numerators is not None:
        return Fraction(sum(table.numerators[::m]), 1 << n)
    return math.fsum(table.masses[::m])  # type: ignore


# Exact test of probability <= 1/m + 2/sqrt(n), squaring to stay rational.
def _within_lemma_bound(probability: Fraction, n: int, m: int) -> bool:
    excess = probability - Fraction(1, m)
    return excess <= 0 or n * excess * excess <= 4


class LemmaRow(typing.NamedTuple):
    n: int
    m: int
    probability: Fraction
    bound: float
    ok: bool

    def as_dict(self) -> dict:
        return self._asdict()


def lemma_bound_check(n_max: int, m_max: int) -> list[LemmaRow]:
    if n_max < 1 or m_max < 1:
        raise ValueError("Grid sizes must be positive")
    if n_max * m_max > config.LEMMA_MAX_ENTRIES:
        raise GuardError(
            f"lemma grid limited to {config.LEMMA_MAX_ENTRIES} entries, got {n_max * m_max}"
        )
    rows = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            probability = prob_divisible(n, m, exact=True)
            ok = _within_lemma_bound(probability, n, m)  # type: ignore
            if not ok:
                log.warning(f"lemma bound fails at n={n}, m={m}: {float(probability)}")
            rows.append(LemmaRow(n, m, probability, 1 / m + 2 / math.sqrt(n), ok))  # type: ignore
    return rows


class MaxMassRow(typing.NamedTuple):
    n: int
    max_mass: Fraction
    bound: float
    ok: bool

    def as_dict(self) -> dict:
        return self._asdict()


# The central mass C(n, n/2) / 2^n is at most 1/sqrt(n).
def max_mass_check(n_max: int) -> list[MaxMassRow]:
    if n_max > config.EXACT_PMF_MAX_STEPS:
        raise GuardError(
            f"exact pmf limited to m <= {config.EXACT_PMF_MAX_STEPS}, got {n_max}"
        )
    rows = []
    for n in range(1, n_max + 1):
        peak = _exact_row(n)[n // 2]
        ok = n * peak * peak <= 1 << (2 * n)
        rows.append(MaxMassRow(n, Fraction(peak, 1 << n), 1 / math.sqrt(n), ok))
    return rows
