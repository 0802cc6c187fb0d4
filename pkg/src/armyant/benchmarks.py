"""Classic benchmark objectives with analytically known optima."""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .space import SearchSpace

# Interior optimum of the schwefel sine term, refined so that evaluating the
# optimum position reproduces the additive offset to double precision.
_SCHWEFEL_X = 420.968746359982
_SCHWEFEL_OFFSET = _SCHWEFEL_X * math.sin(math.sqrt(_SCHWEFEL_X))


def sphere(x):
    return float(np.sum(x * x))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rastrigin(x):
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def ackley(x):
    d = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / d))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / d)
        + 20.0
        + math.e
    )


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def schwefel(x):
    return float(_SCHWEFEL_OFFSET * x.size - np.sum(x * np.sin(np.sqrt(np.abs(x)))))


@dataclass
class BenchmarkFunction:
    name: str
    dim: int
    box: SearchSpace
    known_optimum: float
    optimum_position: np.ndarray | None
    func: Callable[[np.ndarray], float]

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=float))


_CATALOG = {
    "sphere": (sphere, 100.0, 0.0),
    "rosenbrock": (rosenbrock, 30.0, 1.0),
    "rastrigin": (rastrigin, 5.12, 0.0),
    "ackley": (ackley, 32.768, 0.0),
    "griewank": (griewank, 600.0, 0.0),
    "schwefel": (schwefel, 500.0, _SCHWEFEL_X),
}

FUNCTION_NAMES = tuple(_CATALOG)


def get_benchmark(name, dim):
    """Benchmark by name on its standard symmetric box; optimum value is 0."""
    try:
        func, half_range, opt_coord = _CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown benchmark function {name!r}") from None
    return BenchmarkFunction(
        name=name,
        dim=dim,
        box=SearchSpace.cube(dim, -half_range, half_range),
        known_optimum=0.0,
        optimum_position=np.full(dim, float(opt_coord)),
        func=func,
    )


def eval_benchmark(name, x):
    """Evaluate a named benchmark at a point."""
    x = np.asarray(x, dtype=float)
    return get_benchmark(name, x.size)(x)
