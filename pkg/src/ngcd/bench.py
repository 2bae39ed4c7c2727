"""Seeded input generators and an operation-count benchmark harness.

Random inputs come from PCG64 (O'Neill, 2014) via ``numpy.random.PCG64``,
reading its raw 64-bit output only. The raw stream of a seeded PCG64 is
fixed by numpy's stability policy, so campaigns reproduce across machines
and numpy versions.
"""
from __future__ import annotations

import json
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Optional, Sequence

import numpy as np

from .core import ALGORITHMS, NumberList, OpCounters

DISTRIBUTIONS = (
    "uniform-random",
    "common-factor",
    "one-small-many-large",
    "all-equal",
    "adversarial-chain",
)
COUNTER_FIELDS = tuple(f.name for f in fields(OpCounters))
SMALL_BITS = 16


class ConfigError(ValueError):
    pass


class GcdMismatchError(RuntimeError):
    """Two algorithms disagreed on the same input."""

    def __init__(self, xs: NumberList, results: dict[str, int]):
        self.xs = xs
        self.results = results
        shown = ", ".join(f"{k}={v}" for k, v in results.items())
        super().__init__(f"GCD mismatch on input {list(xs)}: {shown}")


@dataclass(frozen=True)
class BenchConfig:
    seed: int = 0
    n: int = 8
    bits: int = 64
    distribution: str = "uniform-random"
    trials: int = 100
    algorithms: tuple[str, ...] = tuple(ALGORITHMS)
    factor: int = 21  # planted g for the common-factor distribution
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must fit in 64 unsigned bits")
        if self.n < 1:
            raise ConfigError("n must be >= 1")
        if self.bits < 1:
            raise ConfigError("bits must be >= 1")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.distribution not in DISTRIBUTIONS:
            raise ConfigError(f"unknown distribution {self.distribution!r}")
        if not self.algorithms:
            raise ConfigError("select at least one algorithm")
        for name in self.algorithms:
            if name not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {name!r}")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ConfigError("duplicate algorithm")
        if self.factor < 1:
            raise ConfigError("planted factor must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")

    def echo(self) -> dict:
        d = asdict(self)
        d["algorithms"] = list(self.algorithms)
        del d["workers"]
        return d


class RandomStream:
    """Arbitrary-size random integers assembled from PCG64 raw words."""

    def __init__(self, seed: int):
        self._bitgen = np.random.PCG64(seed)

    def _word(self) -> int:
        return int(self._bitgen.random_raw())

    def getrandbits(self, k: int) -> int:
        words = (k + 63) // 64
        x = 0
        for _ in range(words):
            x = (x << 64) | self._word()
        return x >> (words * 64 - k)

    def below(self, n: int) -> int:
        """Uniform in ``[0, n)`` by rejection."""
        if n < 1:
            raise ValueError("empty range")
        k = max(1, (n - 1).bit_length())
        while True:
            x = self.getrandbits(k)
            if x < n:
                return x

    def full_size(self, bits: int) -> int:
        """A value with exactly ``bits`` significant bits."""
        return (1 << (bits - 1)) | self.getrandbits(bits - 1) if bits > 1 else 1

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _fibonacci_upto(bits: int) -> list[int]:
    fib = [1, 1]
    while (fib[-1] + fib[-2]).bit_length() <= bits:
        fib.append(fib[-1] + fib[-2])
    return fib


def _one_input(cfg: BenchConfig, rng: RandomStream) -> NumberList:
    n, bits, dist = cfg.n, cfg.bits, cfg.distribution
    if dist == "uniform-random":
        return tuple(rng.getrandbits(bits) for _ in range(n))
    if dist == "common-factor":
        return tuple(cfg.factor * (1 + rng.below(2**bits - 1)) for _ in range(n))
    if dist == "one-small-many-large":
        where = rng.below(n)
        small = 1 + rng.below(2**SMALL_BITS - 1)
        return tuple(small if i == where else rng.full_size(bits) for i in range(n))
    if dist == "all-equal":
        return (rng.full_size(bits),) * n
    if dist == "adversarial-chain":
        # consecutive Fibonacci numbers: worst case for pairwise Euclid
        fib = _fibonacci_upto(bits)
        top = len(fib) - 1 - rng.below(min(3, len(fib)))
        items = [fib[max(top - i, 0)] for i in range(n)]
        rng.shuffle(items)
        return tuple(items)
    raise ConfigError(f"unknown distribution {dist!r}")


def generate_inputs(cfg: BenchConfig) -> list[NumberList]:
    """Deterministic in ``cfg`` (seed included): same config, same lists."""
    rng = RandomStream(cfg.seed)
    return [_one_input(cfg, rng) for _ in range(cfg.trials)]


@dataclass
class AlgorithmStats:
    algorithm: str
    distribution: str
    trials: int
    counters: dict[str, dict[str, float]]
    wall_time_mean_s: float
    per_trial: list[dict[str, int]] = field(repr=False, default_factory=list)


@dataclass
class BenchReport:
    config: dict
    rows: list[AlgorithmStats]
    gcds: list[int] = field(repr=False, default_factory=list)

    def row(self, algorithm: str) -> AlgorithmStats:
        for r in self.rows:
            if r.algorithm == algorithm:
                return r
        raise KeyError(algorithm)

    def to_json_lines(self) -> str:
        """One JSON object per line; ``counters`` lines exclude wall time."""
        lines = [json.dumps({"record": "config", **self.config}, sort_keys=True)]
        for r in self.rows:
            lines.append(json.dumps({
                "record": "counters",
                "algorithm": r.algorithm,
                "distribution": r.distribution,
                "trials": r.trials,
                "stats": r.counters,
            }, sort_keys=True))
        for r in self.rows:
            lines.append(json.dumps({
                "record": "timing",
                "algorithm": r.algorithm,
                "wall_time_mean_s": r.wall_time_mean_s,
            }, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        c = self.config
        head = (f"distribution={c['distribution']} n={c['n']} bits={c['bits']} "
                f"trials={c['trials']} seed={c['seed']}")
        cols = ["algorithm"] + [f"{f} mean/med/max" for f in COUNTER_FIELDS] + ["wall mean (us)"]
        body = []
        for r in self.rows:
            cells = [r.algorithm]
            for f in COUNTER_FIELDS:
                s = r.counters[f]
                cells.append(f"{s['mean']:.1f}/{s['median']:g}/{s['max']:g}")
            cells.append(f"{r.wall_time_mean_s * 1e6:.1f}")
            body.append(cells)
        widths = [max(len(row[i]) for row in [cols] + body) for i in range(len(cols))]
        fmt = lambda row: "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        out = [head, fmt(cols), fmt(["-" * w for w in widths])]
        out += [fmt(row) for row in body]
        return "\n".join(out) + "\n"


def _run_trial(args: tuple[tuple[str, ...], NumberList]):
    algorithms, xs = args
    results = {}
    for name in algorithms:
        t0 = time.perf_counter()
        res = ALGORITHMS[name](xs)
        elapsed = time.perf_counter() - t0
        results[name] = (res.gcd, res.counters.as_dict(), elapsed)
    gcds = {name: r[0] for name, r in results.items()}
    if len(set(gcds.values())) != 1:
        raise GcdMismatchError(xs, gcds)
    return results


def _summary(values: Sequence[int]) -> dict[str, float]:
    return {
        "mean": statistics.fmean(values),
        "median": statistics.median(values),
        "max": max(values),
    }


def run_campaign(cfg: BenchConfig, inputs: Optional[Sequence[NumberList]] = None) -> BenchReport:
    """Run every selected algorithm on every generated input.

    Raises GcdMismatchError as soon as algorithms disagree on a trial.
    ``inputs`` overrides generation (used to inject known inputs).
    """
    if inputs is None:
        inputs = generate_inputs(cfg)
    jobs = [(cfg.algorithms, xs) for xs in inputs]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            trials = list(pool.map(_run_trial, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    else:
        trials = [_run_trial(job) for job in jobs]

    rows = []
    for name in cfg.algorithms:
        per_trial = [t[name][1] for t in trials]
        rows.append(AlgorithmStats(
            algorithm=name,
            distribution=cfg.distribution,
            trials=len(trials),
            counters={f: _summary([c[f] for c in per_trial]) for f in COUNTER_FIELDS},
            wall_time_mean_s=statistics.fmean(t[name][2] for t in trials),
            per_trial=per_trial,
        ))
    gcds = [t[cfg.algorithms[0]][0] for t in trials]
    return BenchReport(cfg.echo(), rows, gcds)
