"""Batch experiments: solver sweeps over random regular graphs and 4-sparsity frequencies.

Per-run seeds come from ``numpy.random.SeedSequence((base_seed, n, d, run))``,
so each cell is reproducible on its own. Solvers that need randomness use
the same tuple extended by a stream index of 1.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .constructive import NotFourSparseError, find_internal_partition_4sparse
from .generation import GenSpec, random_regular
from .graph import DemandFunctions, Graph, is_four_sparse, verify_internal
from .heuristic import HeuristicConfig, local_search
from .oracle import brute_force_partition

WORKERS_ENV = "INTERNAL_PARTITION_WORKERS"
ALGORITHMS = ("heuristic", "constructive", "brute")
DEMAND_RULES = ("half",)


class SweepVerificationError(RuntimeError):
    """A solver claimed a partition that fails verification."""


def derive_seed(base_seed: int, n: int, d: int, run: int, stream: int = 0) -> int:
    key = (base_seed, n, d, run) if stream == 0 else (base_seed, n, d, run, stream)
    return int(np.random.SeedSequence(key).generate_state(1, dtype=np.uint64)[0])


def demands_for(g: Graph, rule: str) -> DemandFunctions:
    if rule == "half":
        return DemandFunctions.half_degree(g)
    raise ValueError(f"unknown demand rule {rule!r}")


@dataclass(frozen=True)
class SweepSpec:
    n_values: tuple[int, ...]
    d_values: tuple[int, ...]
    runs_per_cell: int
    base_seed: int = 0
    algorithm: str = "heuristic"
    demand_rule: str = "half"  # a = b = ceil(d/2)
    force: bool = False  # constructive: run even when the graph is not 4-sparse
    max_iters: int | None = None  # heuristic; default 50 n
    gen_method: str = "auto"

    def __post_init__(self):
        if not self.n_values or not self.d_values:
            raise ValueError("n_values and d_values must be non-empty")
        if self.runs_per_cell < 1:
            raise ValueError("runs_per_cell must be >= 1")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.demand_rule not in DEMAND_RULES:
            raise ValueError(f"unknown demand rule {self.demand_rule!r}")
        if self.algorithm == "constructive" and any(d % 2 for d in self.d_values):
            raise ValueError("constructive sweeps need even d (a = b = d/2)")
        for n in self.n_values:
            for d in self.d_values:
                GenSpec(n, d, 0, method=self.gen_method)

    @classmethod
    def from_dict(cls, raw: dict) -> "SweepSpec":
        raw = dict(raw)
        raw["n_values"] = tuple(raw["n_values"])
        raw["d_values"] = tuple(raw["d_values"])
        return cls(**raw)

    @classmethod
    def from_file(cls, path) -> "SweepSpec":
        return cls.from_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    d: int
    run: int
    seed: int
    algorithm: str
    four_sparse: bool
    outcome: str  # converged | not_converged | no_partition | skipped
    converged: bool
    iterations: int
    wall_time_ms: float
    objective_final: int  # -1 when the run was skipped


CSV_COLUMNS = [f.name for f in fields(ExperimentRecord)]


def run_cell(spec: SweepSpec, n: int, d: int, run: int) -> ExperimentRecord:
    seed = derive_seed(spec.base_seed, n, d, run)
    g = random_regular(GenSpec(n, d, seed, method=spec.gen_method))
    dem = demands_for(g, spec.demand_rule)
    sparse = is_four_sparse(g)[0]
    t0 = time.perf_counter()
    partition, iterations = None, 0
    outcome = None
    if spec.algorithm == "heuristic":
        cfg = HeuristicConfig(seed=derive_seed(spec.base_seed, n, d, run, 1), max_iters=spec.max_iters)
        res = local_search(g, dem, cfg)
        partition, iterations = res.partition, res.iterations
    elif spec.algorithm == "constructive":
        if not sparse and not spec.force:
            outcome = "skipped"
        else:
            try:
                res = find_internal_partition_4sparse(g, dem, force=spec.force)
                partition, iterations = res.partition, len(res.trace)
            except NotFourSparseError:
                outcome = "skipped"
    else:
        partition = brute_force_partition(g, dem)
    wall = (time.perf_counter() - t0) * 1000.0
    if partition is not None:
        report = verify_internal(g, partition, dem)
        if not report.ok:
            raise SweepVerificationError(
                f"{spec.algorithm} returned an invalid partition (n={n}, d={d}, run={run}, "
                f"seed={seed}): {report.violations[:3]}"
            )
        outcome = "converged"
        objective = 0
    elif outcome == "skipped":
        objective = -1
    else:
        outcome = "no_partition" if spec.algorithm == "brute" else "not_converged"
        objective = res.final_objective if spec.algorithm == "heuristic" else -1
    return ExperimentRecord(n, d, run, seed, spec.algorithm, sparse, outcome,
                            partition is not None, iterations, round(wall, 3), objective)


def _run_cell_args(args):
    return run_cell(*args)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_sweep(spec: SweepSpec, workers: int | None = None) -> list[ExperimentRecord]:
    """Run every (n, d, run) cell; output order is (n, d, run) regardless of workers."""
    jobs = [(spec, n, d, r) for n in spec.n_values for d in spec.d_values
            for r in range(spec.runs_per_cell)]
    workers = workers or _workers()
    if workers == 1:
        records = [_run_cell_args(j) for j in jobs]
    else:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_run_cell_args, jobs, chunksize=4))
    return sorted(records, key=lambda r: (r.n, r.d, r.run))


def records_to_csv(records, out=None) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        row["four_sparse"] = int(r.four_sparse)
        row["converged"] = int(r.converged)
        writer.writerow(row)
    text = buf.getvalue()
    if out is not None:
        Path(out).write_text(text)
    return text


def sparsity_frequency(n_values, d: int, runs: int, base_seed: int = 0,
                       method: str = "auto") -> dict[int, float]:
    """Fraction of sampled simple d-regular graphs that are 4-sparse, per n."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    out = {}
    for n in n_values:
        if n <= d + 1:
            raise ValueError(f"need n > d + 1 (n={n}, d={d})")
        hits = 0
        for run in range(runs):
            g = random_regular(GenSpec(n, d, derive_seed(base_seed, n, d, run), method=method))
            hits += is_four_sparse(g)[0]
        out[n] = hits / runs
    return out


def sparsity_to_csv(freq: dict[int, float], d: int, runs: int, out=None) -> str:
    lines = ["n,d,runs,four_sparse_fraction,non_four_sparse_fraction"]
    for n, f in sorted(freq.items()):
        lines.append(f"{n},{d},{runs},{f:.6f},{1 - f:.6f}")
    text = "\n".join(lines) + "\n"
    if out is not None:
        Path(out).write_text(text)
    return text

