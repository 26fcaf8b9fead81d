"""Sweep protocols for the kx ramp."""

import math
from dataclasses import dataclass
from dataclasses import replace

import numpy as np

from .choices import IntegrationScheme
from .exceptions import InvalidProtocolError

MIN_MEASUREMENTS = 8
MAX_LEAD_IN = math.pi / 2.0


@dataclass(frozen=True)
class SweepProtocol:
    """Linear ramp kx(t) = v t - pi over t in [0, T] at fixed ky.

    ``steps`` propagation substeps are split evenly between ``meas_count``
    stops. A ``frozen`` protocol keeps kx at -pi for the whole run.

    A non-zero ``lead_in`` starts the particle at rest at -pi - lead_in and
    accelerates it smoothly over t in [-2 lead_in / v, 0], reaching the ramp
    velocity at -pi; the acceleration and its rate of change vanish at both
    ends. Without it the ramp starts suddenly and the state carries an
    undamped oscillation at the gap frequency.
    """

    ky: float
    T: float
    steps: int = 4800
    meas_count: int = 60
    frozen: bool = False
    scheme: str = IntegrationScheme.MAGNUS4
    lead_in: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "scheme", IntegrationScheme(self.scheme))
        if not math.isfinite(self.T) or self.T <= 0:
            msg = "Sweep duration must be positive"
            raise InvalidProtocolError(msg, T=self.T)
        if self.meas_count < MIN_MEASUREMENTS:
            msg = f"At least {MIN_MEASUREMENTS} measurement stops are needed"
            raise InvalidProtocolError(msg, meas_count=self.meas_count)
        if self.steps < 1 or self.steps % self.meas_count:
            msg = "Substeps must be a positive multiple of the measurement stops"
            raise InvalidProtocolError(
                msg, steps=self.steps, meas_count=self.meas_count
            )
        if not 0.0 <= self.lead_in <= MAX_LEAD_IN:
            msg = "Lead-in must lie between 0 and pi/2"
            raise InvalidProtocolError(msg, lead_in=self.lead_in)

    @classmethod
    def from_drive(
        cls,
        ky,
        omega_t_over_pi,
        A=1.0,
        steps=4800,
        meas_count=60,
        frozen=False,
        scheme=IntegrationScheme.MAGNUS4,
        lead_in=0.0,
    ):
        """Protocol with drive Omega = A and Omega T = ``omega_t_over_pi`` pi."""
        return cls(
            ky=float(ky),
            T=omega_t_over_pi * math.pi / A,
            steps=steps,
            meas_count=meas_count,
            frozen=frozen,
            scheme=scheme,
            lead_in=float(lead_in),
        )

    @property
    def v_kx(self):
        return 0.0 if self.frozen else 2.0 * math.pi / self.T

    @property
    def dt(self):
        return self.T / self.steps

    @property
    def substeps_per_measurement(self):
        return self.steps // self.meas_count

    @property
    def lead_in_duration(self):
        if self.frozen or self.lead_in == 0.0:
            return 0.0
        return 2.0 * self.lead_in / self.v_kx

    @property
    def lead_in_steps(self):
        """Substeps before t = 0, at most ``dt`` long."""
        return math.ceil(self.lead_in_duration / self.dt - 1e-9)

    @property
    def start_kx(self):
        return self.kx_at(-self.lead_in_duration)

    def kx_at(self, t):
        """Unwrapped ramp momentum; runs from -pi - lead_in to pi."""
        duration = self.lead_in_duration
        if t >= 0.0 or duration == 0.0:
            return self.v_kx * t - math.pi
        s = max(0.0, (t + duration) / duration)
        # velocity v (s - sin(2 pi s) / 2 pi), integrated from rest
        travelled = s * s / 2.0 + (math.cos(2.0 * math.pi * s) - 1.0) / (
            4.0 * math.pi**2
        )
        return -math.pi - self.lead_in + 2.0 * self.lead_in * travelled

    def measurement_times(self):
        """Stops t_j = j T / meas_count for j = 1 .. meas_count."""
        return self.T * np.arange(1, self.meas_count + 1) / self.meas_count

    def with_ky(self, ky):
        return replace(self, ky=float(ky))


def ky_line_set(count=11):
    """Evenly spaced ky lines from -pi to pi inclusive."""
    if count < 2:
        msg = "At least two ky lines are needed"
        raise InvalidProtocolError(msg, ky_lines=count)
    return np.linspace(-math.pi, math.pi, count)
