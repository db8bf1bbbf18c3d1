# Utility functions.
import csv
import io
import json
import logging
import math
import os
import typing
from fractions import Fraction

import config
import numpy as np

log = logging.getLogger(__name__)


# Raised when an input exceeds a size guard or a memory cap.
class GuardError(RuntimeError):
    pass


def _env_number(name: str, default, cast=int):
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        log.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return default


# Memory cap for bit arrays, in MiB.
def get_mem_cap_mib() -> int:
    return _env_number("LAB_MEM_CAP_MIB", config.DEFAULT_MEM_CAP_MIB)


def get_workers() -> int:
    return _env_number("LAB_WORKERS", config.MAX_WORKERS)


def get_task_timeout() -> float:
    return _env_number("LAB_TASK_TIMEOUT", config.TASK_TIMEOUT, cast=float)


# Largest partial-sum set accepted by the energy computation.
def get_energy_max_size() -> int:
    return _env_number("LAB_ENERGY_MAX_SIZE", config.DEFAULT_ENERGY_MAX_SIZE)


# Independent generator for substream `index` of the master `seed`.
# SeedSequence mixes (seed, index) so results do not depend on scheduling.
def stream(seed: int, index: int) -> np.random.Generator:
    if seed < 0 or seed >= 1 << 64:
        raise ValueError(f"Seed must be a 64-bit unsigned integer: {seed}")
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


# Parse "500,4000" or "2^10,2^11" into a list of positive integers.
def parse_int_list(text: str) -> list[int]:
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "^" in part:
            base, exponent = part.split("^", 1)
            value = int(base) ** int(exponent)
        else:
            value = int(part)
        if value < 1:
            raise ValueError(f"Expected a positive integer, got {part}")
        values.append(value)
    if not values:
        raise ValueError(f"Empty integer list: {text!r}")
    return values


def parse_float_list(text: str) -> list[float]:
    values = [float(part) for part in text.split(",") if part.strip()]
    if not values:
        raise ValueError(f"Empty number list: {text!r}")
    return values


# Convert exact or numpy scalars to plain JSON/CSV friendly values.
def plain(value):
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, dict):
        return {k: plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def _csv_cell(value) -> str:
    value = plain(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Refusing to write non-finite value {value}")
        return repr(value)
    return str(value)


# Render rows as CSV (header naming every column, in first-seen order) or as a JSON array.
def format_rows(rows: typing.Sequence[dict], fmt: str = config.DEFAULT_FORMAT) -> str:
    if fmt == "json":
        return json.dumps([plain(row) for row in rows], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"Unknown output format {fmt}")
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(key)) for key in columns])
    return out.getvalue()


def write_rows(rows: typing.Sequence[dict], fmt: str, path: str | None = None):
    payload = format_rows(rows, fmt)
    if path is None or path == "-":
        print(payload, end="")
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(payload)
    log.info(f"Wrote {len(rows)} row(s) to {path}")
