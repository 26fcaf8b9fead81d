"""Value types for BHZ App."""

import math
from dataclasses import dataclass
from dataclasses import replace

import numpy as np

from .exceptions import InvalidParametersError

TWO_PI = 2.0 * math.pi


def wrap_angle(value):
    """Wrap an angle into [-pi, pi)."""
    wrapped = math.remainder(float(value), TWO_PI)
    if wrapped >= math.pi:
        wrapped -= TWO_PI
    return wrapped


@dataclass(frozen=True)
class ModelParams:
    """BHZ parameters in reduced units where A sets the energy scale."""

    A: float = 1.0
    B: float = 1.0
    M: float = 2.0
    g: float = 0.0

    def __post_init__(self):
        for name in ("A", "B", "M", "g"):
            value = getattr(self, name)
            if not math.isfinite(value):
                msg = f"Model parameter {name} must be finite"
                raise InvalidParametersError(msg, **{name: value})
        if self.A <= 0:
            msg = "A sets the energy unit and must be positive"
            raise InvalidParametersError(msg, A=self.A)
        if self.g < 0:
            msg = "The block coupling g must be non-negative"
            raise InvalidParametersError(msg, g=self.g)

    @classmethod
    def from_ratios(cls, m_over_2b, g_over_a, A=1.0, B=1.0):
        """Build the point of a phase-diagram sweep, M = 2B x, g = A y."""
        return cls(A=A, B=B, M=2.0 * B * m_over_2b, g=A * g_over_a)

    @property
    def m_over_2b(self):
        return self.M / (2.0 * self.B) if self.B else math.nan

    @property
    def g_over_a(self):
        return self.g / self.A

    def scaled(self, factor):
        """Uniformly rescale every energy, which leaves all invariants unchanged."""
        if factor <= 0:
            msg = "Rescaling factor must be positive"
            raise InvalidParametersError(msg, factor=factor)
        return replace(
            self,
            A=self.A * factor,
            B=self.B * factor,
            M=self.M * factor,
            g=self.g * factor,
        )


@dataclass(frozen=True)
class Momentum:
    """Point of the Brillouin zone, always stored wrapped into [-pi, pi)."""

    kx: float
    ky: float

    def __post_init__(self):
        object.__setattr__(self, "kx", wrap_angle(self.kx))
        object.__setattr__(self, "ky", wrap_angle(self.ky))

    def __iter__(self):
        yield self.kx
        yield self.ky

    def shifted(self, dkx=0.0, dky=0.0):
        return Momentum(self.kx + dkx, self.ky + dky)


@dataclass(frozen=True, eq=False)
class CoefficientPair:
    """The field vectors B+ and B- of the two pseudospin blocks."""

    b_plus: np.ndarray
    b_minus: np.ndarray

    def for_block(self, tau):
        return self.b_plus if tau > 0 else self.b_minus

    @property
    def mass(self):
        """M(k), the common z component."""
        return float(self.b_plus[2])


# (upper level, lower level) driven by each tone, in basis order
# {|+,E1>, |+,H1>, |-,E1>, |-,H1>}.
TONE_LEVELS = ((0, 1), (2, 3), (0, 3), (2, 1))

# Level frequencies in units of the carrier scale, +H1 taken as zero energy.
SYNTHETIC_LEVEL_PATTERN = (1.0, 0.0, 1.3, 0.15)


@dataclass(frozen=True)
class MicrowaveParams:
    """Four microwave tones driving the four hyperfine levels.

    ``level_frequencies`` are (w+E1, w+H1, w-E1, w-H1). The carrier of tone k
    is its level splitting plus its detuning.
    """

    rabi: tuple[float, float, float, float]
    detunings: tuple[float, float, float, float]
    phases: tuple[float, float, float, float]
    level_frequencies: tuple[float, float, float, float]

    def __post_init__(self):
        for name in ("rabi", "detunings", "phases", "level_frequencies"):
            values = tuple(float(value) for value in getattr(self, name))
            if len(values) != len(TONE_LEVELS):
                msg = f"{name} needs one entry per tone"
                raise InvalidParametersError(msg, **{name: values})
            object.__setattr__(self, name, values)

    @property
    def transitions(self):
        levels = self.level_frequencies
        return tuple(levels[upper] - levels[lower] for upper, lower in TONE_LEVELS)

    @property
    def carriers(self):
        return tuple(
            transition + detuning
            for transition, detuning in zip(
                self.transitions, self.detunings, strict=True
            )
        )

    @property
    def closure(self):
        """Delta prime = D1 + D2 - D3 - D4."""
        d1, d2, d3, d4 = self.detunings
        return d1 + d2 - d3 - d4

    def with_detuning_offset(self, tone, offset):
        """Shift the detuning of one tone (1-based), breaking the closure."""
        detunings = list(self.detunings)
        detunings[tone - 1] += offset
        return replace(self, detunings=tuple(detunings))
