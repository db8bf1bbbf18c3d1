# Sequences.
# Constructions of integer sequences and counting of their consecutive sums.

import itertools
import json
import logging
import math
import typing
from enum import Enum

import config
import numpy as np
from utils import GuardError, get_mem_cap_mib, stream

log = logging.getLogger(__name__)

INT64_MAX = np.iinfo(np.int64).max

# Number of set bits for every byte value.
POPCOUNT_TABLE = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


class SequenceKind(Enum):
    IDENTITY = "identity"
    RADEMACHER = "rademacher"
    BLOCK = "block"
    PERMUTATION = "permutation"
    PRANDOM = "prandom"
    EXPLICIT = "explicit"

    def __str__(self) -> str:
        return self.value


# A finite positive-integer sequence a_1, ..., a_k together with how it was built.
class Sequence(typing.NamedTuple):
    kind: SequenceKind
    n: int
    values: tuple[int, ...]
    params: dict = {}
    seed: int | None = None

    def __len__(self):
        return len(self.values)

    def is_increasing(self) -> bool:
        return all(x < y for x, y in zip(self.values, self.values[1:]))

    def as_dict(self) -> dict:
        return {
            "kind": str(self.kind),
            "n": self.n,
            "params": dict(self.params),
            "seed": self.seed,
            "values": list(self.values),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @staticmethod
    def from_json(text: str) -> "Sequence":
        data = json.loads(text)
        values = tuple(int(v) for v in data["values"])
        if any(v < 1 for v in values):
            raise ValueError("Sequence values must be positive integers")
        return Sequence(
            kind=SequenceKind(data["kind"]),
            n=int(data["n"]),
            values=values,
            params=dict(data.get("params") or {}),
            seed=data.get("seed"),
        )


# Prefix sums p_0 = 0 < p_1 < ... < p_k of a sequence.
class PartialSumSet(typing.NamedTuple):
    sums: np.ndarray

    def __len__(self):
        return len(self.sums)

    def total(self) -> int:
        return int(self.sums[-1])


def _require_positive(name: str, value: int):
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


def make_identity(n: int) -> Sequence:
    _require_positive("n", n)
    return Sequence(SequenceKind.IDENTITY, n, tuple(range(1, n + 1)))


# a_i = 3i + eps_i with i.i.d. uniform signs eps_i.
def make_rademacher(
    n: int, seed: int = config.DEFAULT_SEED, rng: np.random.Generator | None = None
) -> Sequence:
    _require_positive("n", n)
    if rng is None:
        rng = stream(seed, 0)
    signs = 2 * np.asarray(rng.integers(0, 2, size=n), dtype=np.int64) - 1
    values = 3 * np.arange(1, n + 1, dtype=np.int64) + signs
    return Sequence(SequenceKind.RADEMACHER, n, tuple(int(v) for v in values), seed=seed)


# a_i = 2i if b divides i, else 2i - 1.
def make_block(n: int, b: int) -> Sequence:
    _require_positive("n", n)
    _require_positive("b", b)
    if not block_parameter_in_range(n, b):
        log.warning(
            f"block parameter b={b} is outside [log n, n/(log n)^2] for n={n}; constructing anyway"
        )
    values = tuple(2 * i if i % b == 0 else 2 * i - 1 for i in range(1, n + 1))
    return Sequence(SequenceKind.BLOCK, n, values, params={"b": b})


def block_parameter_in_range(n: int, b: int) -> bool:
    if n < 2:
        return False
    log_n = math.log(n)
    return log_n <= b <= n / log_n**2


# Uniform random permutation of [n] by a Fisher-Yates shuffle.
def make_permutation(
    n: int, seed: int = config.DEFAULT_SEED, rng: np.random.Generator | None = None
) -> Sequence:
    _require_positive("n", n)
    if rng is None:
        rng = stream(seed, 0)
    values = list(range(1, n + 1))
    # swap position i with a uniform position in [0, i], from the back
    highs = np.arange(n, 1, -1)
    picks = rng.integers(0, highs) if n > 1 else []
    for i, j in zip(range(n - 1, 0, -1), picks):
        values[i], values[j] = values[j], values[i]
    return Sequence(SequenceKind.PERMUTATION, n, tuple(values), seed=seed)


# Each element of [n] kept independently with probability p. May be empty.
def make_prandom(
    n: int,
    p: float,
    seed: int = config.DEFAULT_SEED,
    rng: np.random.Generator | None = None,
) -> Sequence:
    _require_positive("n", n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if rng is None:
        rng = stream(seed, 0)
    keep = rng.random(n) < p
    values = tuple(int(v) for v in np.flatnonzero(keep) + 1)
    return Sequence(SequenceKind.PRANDOM, n, values, params={"p": p}, seed=seed)


def make_explicit(values: typing.Iterable[int], n: int | None = None) -> Sequence:
    values = tuple(int(v) for v in values)
    if any(v < 1 for v in values):
        raise ValueError("Sequence values must be positive integers")
    if n is None:
        n = max(values, default=0)
    return Sequence(SequenceKind.EXPLICIT, n, values)


def partial_sums(a: Sequence) -> PartialSumSet:
    if sum(a.values) > INT64_MAX:
        raise GuardError(f"Partial sums of a {a.kind} sequence overflow 64 bits")
    sums = np.zeros(len(a.values) + 1, dtype=np.int64)
    np.cumsum(np.asarray(a.values, dtype=np.int64), out=sums[1:])
    return PartialSumSet(sums)


# Set the bits of `bits` at the sorted, distinct positions `positions`.
def _mark(bits: np.ndarray, positions: np.ndarray):
    byte_index = positions >> 3
    masks = np.left_shift(np.uint8(1), (positions & 7).astype(np.uint8))
    # positions sharing a byte are adjacent because they are sorted
    starts = np.flatnonzero(np.concatenate(([True], byte_index[1:] != byte_index[:-1])))
    bits[byte_index[starts]] |= np.bitwise_or.reduceat(masks, starts)


def _popcount(bits: np.ndarray) -> int:
    total = 0
    for start in range(0, len(bits), config.POPCOUNT_CHUNK_BYTES):
        chunk = bits[start : start + config.POPCOUNT_CHUNK_BYTES]
        total += int(POPCOUNT_TABLE[chunk].sum(dtype=np.int64))
    return total


# |S(a)| by marking every difference p_j - p_i in a bit array of length p_k + 1.
def count_distinct_sums(a: Sequence, mem_cap_mib: int | None = None) -> int:
    sums = partial_sums(a).sums
    if len(sums) == 1:
        return 0
    if np.any(sums[1:] <= sums[:-1]):
        raise ValueError("Sequence values must be positive integers")
    top = int(sums[-1])
    nbytes = top // 8 + 1
    cap_mib = get_mem_cap_mib() if mem_cap_mib is None else mem_cap_mib
    if nbytes > cap_mib << 20:
        raise GuardError(
            f"sieve too large: {nbytes} bytes needed for sums up to {top}, cap is {cap_mib} MiB"
        )
    bits = np.zeros(nbytes, dtype=np.uint8)
    for i in range(len(sums) - 1):
        _mark(bits, sums[i + 1 :] - sums[i])
    return _popcount(bits)


# |S(a)| by collecting every interval sum in a set. Oracle for count_distinct_sums.
def brute_distinct_sums(a: Sequence) -> int:
    k = len(a.values)
    if k > config.BRUTE_MAX_LENGTH:
        raise GuardError(
            f"brute force limited to {config.BRUTE_MAX_LENGTH} terms, got {k}"
        )
    found = set()
    for u in range(k):
        total = 0
        for v in range(u, k):
            total += a.values[v]
            found.add(total)
    return len(found)


# True if every consecutive sum of a block sequence is v^2 - u^2 + floor((v-u)/b) + eps, eps in {0, 1}.
def block_formula_check(a: Sequence) -> bool:
    if a.kind != SequenceKind.BLOCK:
        raise ValueError(f"Expected a block sequence, got {a.kind}")
    b = a.params["b"]
    sums = partial_sums(a).sums
    index = np.arange(len(sums), dtype=np.int64)
    for u in range(len(sums) - 1):
        v = index[u + 1 :]
        slack = (sums[u + 1 :] - sums[u]) - (v * v - u * u + (v - u) // b)
        if np.any((slack < 0) | (slack > 1)):
            log.info(f"block formula fails at u={u}")
            return False
    return True


# Largest |S(a)| over all strictly increasing sequences in [n], with the first witness found.
def max_distinct_sums(n: int) -> tuple[int, tuple[int, ...]]:
    _require_positive("n", n)
    if n > config.MAXIMUM_SEARCH_MAX_N:
        raise GuardError(
            f"exhaustive search limited to n <= {config.MAXIMUM_SEARCH_MAX_N}, got {n}"
        )
    best, witness = 0, ()
    for size in range(n, 0, -1):
        # sums of k terms number at most k(k+1)/2
        if size * (size + 1) // 2 <= best:
            break
        for chosen in itertools.combinations(range(1, n + 1), size):
            count = brute_distinct_sums(make_explicit(chosen, n))
            if count > best:
                best, witness = count, chosen
    return best, witness
