"""Repeated-run comparison harness with paired seeds and CSV reporting."""

import csv
from dataclasses import dataclass, field

import numpy as np

from . import baselines, optimizer
from .benchmarks import get_benchmark
from .rng import RandomSource

ALGORITHMS = ("aaso", "pso", "random")


@dataclass
class RunStatistics:
    """Best/mean/std of final fitness over repeated runs of one pairing."""

    algorithm: str
    function: str
    runs: int
    best: float
    mean: float
    std: float
    histories: list = field(default_factory=list, repr=False)

    @property
    def finals(self):
        return np.array([h[-1] for h in self.histories])


def _run_algorithm(name, func, population, iterations, seed):
    rng = RandomSource(seed)
    if name == "aaso":
        config = optimizer.OptimizerConfig(
            population=population, max_iters=iterations, seed=seed
        )
        return optimizer.run(func, func.box, config, rng)
    if name == "pso":
        params = baselines.PSOParams(swarm=population, iters=iterations)
        return baselines.pso_run(func, func.box, params, rng)
    if name == "random":
        budget = population * (iterations + 1)
        return baselines.random_search_run(
            func, func.box, budget, rng, record_every=population
        )
    raise ValueError(f"unknown algorithm {name!r}")


def compare(algorithms, functions, runs, base_seed, population=30, iterations=1000, dim=30):
    """Run every algorithm on every function with paired per-run seeds.

    Run r of each pairing uses seed base_seed + r, so all algorithms see
    identical seeds and budgets (population x iterations evaluations, plus
    the optimizers' initialization sweep). Returns one RunStatistics per
    (algorithm, function) with per-run traces attached.
    """
    if runs < 2:
        raise ValueError("need at least 2 runs for statistics")
    results = []
    for name in algorithms:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r}")
        for fname in functions:
            func = get_benchmark(fname, dim)
            histories = [
                _run_algorithm(name, func, population, iterations, base_seed + r).history
                for r in range(runs)
            ]
            finals = np.array([h[-1] for h in histories])
            results.append(
                RunStatistics(
                    algorithm=name,
                    function=fname,
                    runs=runs,
                    best=float(finals.min()),
                    mean=float(finals.mean()),
                    std=float(finals.std(ddof=1)),
                    histories=histories,
                )
            )
    return results


def write_statistics_csv(stats, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["algorithm", "function", "runs", "best", "mean", "std"])
        for s in stats:
            writer.writerow([s.algorithm, s.function, s.runs, repr(s.best), repr(s.mean), repr(s.std)])


def write_trace_csv(history, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iter", "best_fitness"])
        for i, v in enumerate(history):
            writer.writerow([i, repr(float(v))])
