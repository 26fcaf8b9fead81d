"""Brillouin zone discretization."""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from apps.bhz.params import Momentum

from .exceptions import InvalidGridError

MIN_DIVISIONS = 8


@dataclass(frozen=True)
class BZGrid:
    """Periodic R x N lattice with k_r = -pi + 2 pi r / R and k_n = -pi + 2 pi n / N."""

    R: int = 60
    N: int = 60

    def __post_init__(self):
        for name in ("R", "N"):
            value = getattr(self, name)
            if int(value) != value or value < MIN_DIVISIONS:
                msg = f"Grid needs at least {MIN_DIVISIONS} divisions along {name}"
                raise InvalidGridError(msg, **{name: value})

    @property
    def shape(self):
        return (self.R, self.N)

    @property
    def spacing(self):
        return (2.0 * math.pi / self.R, 2.0 * math.pi / self.N)

    @cached_property
    def kx_values(self):
        # Integer numerators keep the zone centre at exactly zero.
        return np.array([math.pi * (2 * r - self.R) / self.R for r in range(self.R)])

    @cached_property
    def ky_values(self):
        return np.array([math.pi * (2 * n - self.N) / self.N for n in range(self.N)])

    def momentum(self, r, n):
        """Grid point (r, n); indices wrap around the zone."""
        return Momentum(self.kx_values[r % self.R], self.ky_values[n % self.N])

    def momenta(self):
        """All grid points, kx index outermost."""
        for r in range(self.R):
            for n in range(self.N):
                yield self.momentum(r, n)

    def plaquette(self, r, n):
        """Corners (r, n), (r+1, n), (r+1, n+1), (r, n+1) in loop order."""
        return (
            self.momentum(r, n),
            self.momentum(r + 1, n),
            self.momentum(r + 1, n + 1),
            self.momentum(r, n + 1),
        )
