"""Box-bounded search spaces and boundary handling."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

TWO_PI = 2.0 * np.pi


class BoundaryPolicy(Enum):
    """What to do with coordinates that leave the box after a move."""

    CLAMP = "clamp"
    WRAP = "wrap"


@dataclass
class SearchSpace:
    """A D-dimensional axis-aligned box with a boundary policy.

    CLAMP projects offending coordinates onto the nearest bound. WRAP
    reduces them modulo the interval width into [lower, upper), which is
    the right treatment for periodic variables such as angles.
    """

    lower: np.ndarray
    upper: np.ndarray
    boundary_policy: BoundaryPolicy = BoundaryPolicy.CLAMP
    dim: int = field(init=False)

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        if self.lower.shape != self.upper.shape or self.lower.ndim != 1:
            raise ValueError("lower and upper must be 1-D arrays of equal length")
        if self.lower.size == 0:
            raise ValueError("search space must have at least one dimension")
        if not np.all(np.isfinite(self.lower)) or not np.all(np.isfinite(self.upper)):
            raise ValueError("bounds must be finite")
        if np.any(self.lower >= self.upper):
            raise ValueError("each lower bound must be strictly below its upper bound")
        self.dim = int(self.lower.size)

    @classmethod
    def cube(cls, dim, low, high, boundary_policy=BoundaryPolicy.CLAMP):
        """Same (low, high) interval in every dimension."""
        return cls(np.full(dim, float(low)), np.full(dim, float(high)), boundary_policy)

    @classmethod
    def angles(cls, dim):
        """The circle [0, 2*pi) per dimension, wrapped."""
        return cls.cube(dim, 0.0, TWO_PI, BoundaryPolicy.WRAP)

    @property
    def width(self):
        return self.upper - self.lower

    def apply_bounds(self, x):
        """Return a copy of ``x`` corrected into the box per the policy."""
        x = np.asarray(x, dtype=float)
        if self.boundary_policy is BoundaryPolicy.CLAMP:
            return np.clip(x, self.lower, self.upper)
        w = self.width
        out = self.lower + np.mod(x - self.lower, w)
        # float mod can land exactly on the upper bound for tiny negatives
        return np.where(out >= self.upper, self.lower, out)

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        if self.boundary_policy is BoundaryPolicy.CLAMP:
            return bool(np.all(x >= self.lower) and np.all(x <= self.upper))
        return bool(np.all(x >= self.lower) and np.all(x < self.upper))

    def sample_uniform(self, rng, n=None):
        """Uniform points in the box; shape (dim,) or (n, dim)."""
        shape = (self.dim,) if n is None else (n, self.dim)
        u = rng.uniform(shape)
        return self.lower + u * self.width
