# Bounds.
# The upper-bound side: the region measure, its optimisation, lattice counts,
# gcd-sum diagnostics and the named constants.

import functools
import logging
import math
import typing
from fractions import Fraction

import config
import numpy as np
from scipy import integrate
from sequences import Sequence, count_distinct_sums
from utils import GuardError

log = logging.getLogger(__name__)

E2 = math.e**2


class MathConstants(typing.NamedTuple):
    c4: float = (E2 - 1) / (2 * (E2 + 1))
    alpha_star: float = (2 * math.e / (E2 + 1)) ** 2
    h_min: float = (E2 - 1) / (E2 + 1)
    permutation_limit: float = (1 + math.exp(-2)) / 4
    eft_delta: float = 1 - (1 + math.log(math.log(2))) / math.log(2)
    c2_rough: float = 2e-2
    c3_rough: float = 2e-3

    def as_rows(self) -> list[dict]:
        return [{"name": name, "value": value} for name, value in self._asdict().items()]


CONSTANTS = MathConstants()


class LatticeCount(typing.NamedTuple):
    n: int
    alpha: float
    count: int
    ratio: float
    measure: float

    def as_dict(self) -> dict:
        row = self._asdict()
        row["abs_err"] = abs(self.ratio - self.measure)
        return row


class UpperBoundCheck(typing.NamedTuple):
    lhs: int
    rhs: int
    ok: bool

    def as_dict(self) -> dict:
        return self._asdict()


def _check_alpha(alpha: float):
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha}")


def _log_ratio(alpha: float) -> float:
    return math.log((1 + math.sqrt(1 - alpha)) / math.sqrt(alpha))


# Area of {(x, y) in [0,1]^2 : y^2 - x^2 >= alpha}.
def lambda_measure(alpha: float) -> float:
    _check_alpha(alpha)
    return 0.5 * (math.sqrt(1 - alpha) - alpha * _log_ratio(alpha))


# Adaptive quadrature of the same area, as an oracle for the closed form.
def lambda_measure_quad(alpha: float) -> float:
    _check_alpha(alpha)
    value, _ = integrate.quad(
        lambda x: 1 - math.sqrt(x * x + alpha),
        0.0,
        math.sqrt(1 - alpha),
        epsabs=1e-13,
        epsrel=1e-13,
    )
    return value


def h(alpha: float) -> float:
    _check_alpha(alpha)
    return alpha + math.sqrt(1 - alpha) - alpha * _log_ratio(alpha)


def h_prime(alpha: float) -> float:
    _check_alpha(alpha)
    return 1 - _log_ratio(alpha)


# Bisection on h', which increases from -inf to 1 over (0, 1).
def minimize_h() -> tuple[float, float]:
    lo, hi = 1e-9, 1 - 1e-9
    mid = 0.5 * (lo + hi)
    for _ in range(config.BISECTION_MAX_STEPS):
        mid = 0.5 * (lo + hi)
        slope = h_prime(mid)
        if abs(slope) <= config.BISECTION_TOLERANCE or hi - lo <= 1e-16:
            break
        if slope < 0:
            lo = mid
        else:
            hi = mid
    log.info(f"h minimised at alpha={mid!r}, h'={h_prime(mid)!r}")
    return mid, h(mid)


# Smallest integer >= alpha * (n + 1)^2, computed exactly from the binary value of alpha.
def _threshold(n: int, alpha: float) -> int:
    return math.ceil(Fraction(alpha) * (n + 1) ** 2)


# |L_n| = #{0 <= i < j <= n : (i+1) + ... + j >= alpha (n+1)^2 / 2}.
def lattice_count(n: int, alpha: float) -> LatticeCount:
    _check_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > config.LATTICE_MAX_N:
        raise GuardError(f"lattice count limited to n <= {config.LATTICE_MAX_N}, got {n}")
    # twice the interval sum is j(j+1) - i(i+1)
    threshold = _threshold(n, alpha)
    count = 0
    j = 1
    for i in range(n):
        j = max(j, i + 1)
        target = i * (i + 1) + threshold
        while j <= n and j * (j + 1) < target:
            j += 1
        if j > n:
            break
        count += n - j + 1
    return LatticeCount(n, alpha, count, count / (n + 1) ** 2, lambda_measure(alpha))


# |S(a)| <= ceil(alpha (n+1)^2 / 2) + |L_n(alpha)| for a strictly increasing in [n].
def upper_bound_check(a: Sequence, alpha: float) -> UpperBoundCheck:
    _check_alpha(alpha)
    if not a.is_increasing():
        raise ValueError("upper bound check needs a strictly increasing sequence")
    if any(v > a.n for v in a.values):
        raise ValueError(f"upper bound check needs values in [1, {a.n}]")
    lhs = count_distinct_sums(a)
    rhs = math.ceil(Fraction(alpha) * (a.n + 1) ** 2 / 2) + lattice_count(a.n, alpha).count
    ok = lhs <= rhs
    if not ok:
        log.warning(f"upper bound fails for {a.kind} n={a.n} alpha={alpha}: {lhs} > {rhs}")
    return UpperBoundCheck(lhs, rhs, ok)


# Euler's totient for 0..limit, sieved once and shared.
@functools.lru_cache(maxsize=1)
def _totient_table(limit: int) -> np.ndarray:
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # untouched, so prime
            phi[p::p] -= phi[p::p] // p
    phi.setflags(write=False)
    return phi


_totient_limit = 0


def totients(limit: int) -> np.ndarray:
    global _totient_limit
    _totient_limit = max(_totient_limit, limit, 1)
    return _totient_table(_totient_limit)[: limit + 1]


# sum_{d | l} d * phi(l / d) for every l <= limit.
def pillai_values(limit: int) -> np.ndarray:
    phi = totients(limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        out[d::d] += d * phi[1 : limit // d + 1]
    return out


def gcd_row_sum(l: int) -> int:
    return int(np.gcd(np.arange(1, l + 1, dtype=np.int64), l).sum())


def pillai_check(l_max: int) -> bool:
    if l_max > config.PILLAI_MAX_L:
        raise GuardError(f"pillai check limited to l <= {config.PILLAI_MAX_L}, got {l_max}")
    pillai = pillai_values(l_max)
    for l in range(1, l_max + 1):
        if gcd_row_sum(l) != pillai[l]:
            log.warning(f"pillai identity fails at l={l}")
            return False
    return True


GCD_SUM_METHODS = ("direct", "pillai", "interchanged")


# G(n) = sum_{l <= n} l^(-3/2) sum_{k <= l} gcd(k, l).
def gcd_sum(n: int, method: str = "pillai") -> float:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if method == "direct":
        if n > config.GCD_DIRECT_MAX_N:
            raise GuardError(f"direct gcd sum limited to n <= {config.GCD_DIRECT_MAX_N}")
        return math.fsum(gcd_row_sum(l) / l**1.5 for l in range(1, n + 1))
    if n > config.GCD_TOTIENT_MAX_N:
        raise GuardError(f"gcd sum limited to n <= {config.GCD_TOTIENT_MAX_N}")
    if method == "pillai":
        l = np.arange(1, n + 1, dtype=np.float64)
        return math.fsum(pillai_values(n)[1:] / l**1.5)
    if method == "interchanged":
        # sum_d phi(d) / d^(3/2) * sum_{l' <= n/d} 1/sqrt(l')
        phi = totients(n)[1:]
        d = np.arange(1, n + 1)
        harmonic_half = np.cumsum(1.0 / np.sqrt(np.arange(1, n + 1)))
        inner = harmonic_half[n // d - 1]
        return math.fsum(phi / d**1.5 * inner)
    raise ValueError(f"Unknown gcd sum method {method}, expected one of {GCD_SUM_METHODS}")


# 2 sqrt(n) sum_{d <= n} phi(d) / d^2, which bounds G(n) from above.
def gcd_sum_majorant(n: int) -> float:
    phi = totients(n)[1:]
    d = np.arange(1, n + 1, dtype=np.float64)
    return 2 * math.sqrt(n) * math.fsum(phi / d**2)


class GcdScanRow(typing.NamedTuple):
    n: int
    G: float
    G_over_sqrtn_logn: float

    def as_dict(self) -> dict:
        return self._asdict()


def gcd_scan(n_list: list[int], method: str = "pillai") -> list[GcdScanRow]:
    rows = []
    for n in n_list:
        value = gcd_sum(n, method)
        scale = math.sqrt(n) * math.log(n) if n > 1 else 1.0
        rows.append(GcdScanRow(n, value, value / scale))
    return rows
