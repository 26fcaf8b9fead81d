"""Run configuration and result records for Runs App."""

import itertools
import math
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from pathlib import Path

from django.conf import settings

from apps.bhz.params import ModelParams
from apps.dynamics.protocols import SweepProtocol
from apps.dynamics.protocols import ky_line_set
from apps.invariants.grids import BZGrid

from .choices import RecordStatus
from .exceptions import ConfigError


def simulation_default(name):
    return settings.SIMULATION_DEFAULTS[name]


@dataclass(frozen=True)
class ModelSection:
    B: float
    M: float
    A: float = 1.0
    g: float = 0.0

    def to_params(self):
        return ModelParams(A=self.A, B=self.B, M=self.M, g=self.g)


@dataclass(frozen=True)
class GridSection:
    R: int = 60
    N: int = 60

    def to_grid(self):
        return BZGrid(R=self.R, N=self.N)


@dataclass(frozen=True)
class ProtocolSection:
    omega_t_over_pi: float = 24.0
    steps: int = 4800
    meas_count: int = 60
    ky_lines: int = 11
    smoothing_window: int = 1
    scheme: str = "magnus4"
    lead_in: float = math.pi / 2.0

    def protocols(self, A, omega_t_over_pi=None):
        """One sweep protocol per ky line at the given drive."""
        omega_t_over_pi = omega_t_over_pi or self.omega_t_over_pi
        return [
            SweepProtocol.from_drive(
                ky,
                omega_t_over_pi,
                A=A,
                steps=self.steps,
                meas_count=self.meas_count,
                scheme=self.scheme,
                lead_in=self.lead_in,
            )
            for ky in ky_line_set(self.ky_lines)
        ]


@dataclass(frozen=True)
class SweepSection:
    m_over_2b_values: tuple = ()
    g_over_a_values: tuple = ()
    omega_t_over_pi_values: tuple = ()


@dataclass(frozen=True)
class TomographySection:
    ky: float = 0.5


@dataclass(frozen=True)
class FramesSection:
    kx: float = 0.3
    ky: float = 0.7
    synthetic_carrier_scale: float = 50.0
    duration: float = 4.0
    samples: int = 400
    closure_offset: float = 0.0


@dataclass(frozen=True)
class SweepPoint:
    m_over_2b: float
    g_over_a: float
    omega_t_over_pi: float

    @property
    def key(self):
        return (self.m_over_2b, self.g_over_a, self.omega_t_over_pi)


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration, see ``RunConfigSerializer`` for the file layout."""

    model: ModelSection
    output_path: Path
    grid: GridSection = field(default_factory=GridSection)
    protocol: ProtocolSection = field(default_factory=ProtocolSection)
    reference_mode: str = "adiabatic"
    gap_floor: float = 1e-6
    sweep: SweepSection = field(default_factory=SweepSection)
    tomography: TomographySection = field(default_factory=TomographySection)
    frames: FramesSection = field(default_factory=FramesSection)
    workers: int = 1
    seed: int | None = None

    def with_overrides(self, output_path=None, workers=None, seed=None):
        """Apply command-line overrides on top of the file values."""
        changes = {}
        if output_path is not None:
            changes["output_path"] = resolve_output_path(output_path)
        if workers is not None:
            if workers < 1:
                msg = "workers must be at least 1"
                raise ConfigError(msg, workers=workers)
            changes["workers"] = workers
        if seed is not None:
            changes["seed"] = seed
        return replace(self, **changes)

    def params_at(self, m_over_2b, g_over_a):
        A, B = self.model.A, self.model.B
        return ModelParams.from_ratios(m_over_2b, g_over_a, A=A, B=B)

    def sweep_points(self):
        """Sweep points in lexicographic key order; empty axes use the base value."""
        base = self.model.to_params()
        axes = (
            self.sweep.m_over_2b_values or (base.m_over_2b,),
            self.sweep.g_over_a_values or (base.g_over_a,),
            self.sweep.omega_t_over_pi_values or (self.protocol.omega_t_over_pi,),
        )
        keys = sorted(set(itertools.product(*(map(float, axis) for axis in axes))))
        return [SweepPoint(*key) for key in keys]

    def as_dict(self):
        data = asdict(self)
        data["output_path"] = str(self.output_path)
        return data


@dataclass(frozen=True)
class SweepRecord:
    m_over_2b: float
    g_over_a: float
    omega_t_over_pi: float
    status: str = RecordStatus.OK
    cs_ulink: float = math.nan
    c_plus: float = math.nan
    c_minus: float = math.nan
    cs_lr: float = math.nan
    delta_s: float = math.nan
    delta_cv: float = math.nan

    @classmethod
    def for_point(cls, point, **values):
        return cls(
            m_over_2b=point.m_over_2b,
            g_over_a=point.g_over_a,
            omega_t_over_pi=point.omega_t_over_pi,
            **values,
        )

    def as_dict(self):
        data = asdict(self)
        data["status"] = RecordStatus(self.status).value
        return data


SWEEP_COLUMNS = tuple(SweepRecord.__dataclass_fields__)


def resolve_output_path(value):
    """Relative output paths live under ``settings.SIMULATION_OUTPUT_DIR``."""
    path = Path(value)
    if not path.is_absolute():
        path = Path(settings.SIMULATION_OUTPUT_DIR) / path
    return path
