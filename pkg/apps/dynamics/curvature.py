"""Berry curvature from the linear response of the generalized force.

Along a ramp at rate v the force <-dH/dky> on each pseudospin deviates from
its adiabatic value by v times the Berry curvature density, so every snapshot
gives F = (<f> - <f0>) / v at the momentum reached at that stop.
"""

import logging
import math
from dataclasses import dataclass
from functools import partial

import numpy as np
from scipy.ndimage import uniform_filter1d

from apps.bhz.params import Momentum
from apps.invariants.spin import DEFAULT_GAP_FLOOR
from apps.invariants.spin import spin_split

from .choices import ReferenceMode
from .evolution import bloch_expectations
from .evolution import initial_state_parameters
from .evolution import prepare_initial_state
from .evolution import project_pseudospin
from .evolution import propagate
from .exceptions import InvalidProtocolError
from .exceptions import NonUniformSamplingError

logger = logging.getLogger(__name__)

BRANCHES = (1, -1)
SPACING_TOLERANCE = 1e-9


def generalized_force(params, ky, bloch):
    """<f> = A cos ky <sy> + 2B sin ky <sz> for one pseudospin."""
    _, sigma_y, sigma_z = bloch
    return params.A * math.cos(ky) * sigma_y + 2.0 * params.B * math.sin(ky) * sigma_z


def adiabatic_reference(
    params, k, tau, mode=ReferenceMode.ADIABATIC, *, gap_floor=DEFAULT_GAP_FLOOR
):
    """Force the pseudospin would feel without the ramp, per ``mode``."""
    mode = ReferenceMode(mode)
    if mode == ReferenceMode.CONSTANT:
        return 4.0 * params.B * math.sin(k.ky)
    if mode == ReferenceMode.INITIAL:
        k = Momentum(-math.pi, k.ky)
    state = spin_split(params, k, gap_floor=gap_floor).for_branch(tau)
    eta = project_pseudospin(state, tau)
    return generalized_force(params, k.ky, bloch_expectations(eta))


@dataclass(frozen=True, eq=False)
class CurvatureLine:
    """Curvature densities sampled along one ky line."""

    ky: float
    kx: np.ndarray
    f_plus: np.ndarray
    f_minus: np.ndarray
    initial_parameters: object = None

    @property
    def f_s(self):
        return self.f_plus - self.f_minus

    def for_branch(self, tau):
        return self.f_plus if tau > 0 else self.f_minus

    def rows(self):
        for kx, f_plus, f_minus, f_s in zip(
            self.kx, self.f_plus, self.f_minus, self.f_s, strict=True
        ):
            yield (float(kx), self.ky, float(f_plus), float(f_minus), float(f_s))


def berry_curvature_lr(
    params,
    protocol,
    mode=ReferenceMode.ADIABATIC,
    *,
    gap_floor=DEFAULT_GAP_FLOOR,
    smoothing_window=1,
):
    """Prepare, propagate and read the curvature off every measurement stop."""
    if protocol.v_kx == 0.0:
        msg = "A frozen ramp has no linear response"
        raise InvalidProtocolError(msg, ky=protocol.ky)
    psi0 = prepare_initial_state(
        params, protocol.ky, kx=protocol.start_kx, gap_floor=gap_floor
    )
    snapshots = propagate(params, protocol, psi0)

    kx = np.array([snapshot.kx for snapshot in snapshots])
    curvature = {}
    for tau in BRANCHES:
        values = []
        for snapshot in snapshots:
            eta = project_pseudospin(snapshot.psi, tau)
            force = generalized_force(params, protocol.ky, bloch_expectations(eta))
            reference = adiabatic_reference(
                params,
                Momentum(snapshot.kx, protocol.ky),
                tau,
                mode,
                gap_floor=gap_floor,
            )
            values.append((force - reference) / protocol.v_kx)
        values = np.array(values)
        if smoothing_window > 1:
            values = uniform_filter1d(values, size=smoothing_window, mode="wrap")
        curvature[tau] = values

    return CurvatureLine(
        ky=protocol.ky,
        kx=kx,
        f_plus=curvature[1],
        f_minus=curvature[-1],
        initial_parameters=initial_state_parameters(psi0),
    )


@dataclass(frozen=True, eq=False)
class CurvatureMap:
    """Curvature lines covering the zone, ordered by ky."""

    lines: tuple
    omega_t_over_pi: float = math.nan
    reference_mode: str = ReferenceMode.ADIABATIC

    def __post_init__(self):
        lines = tuple(sorted(self.lines, key=lambda line: line.ky))
        object.__setattr__(self, "lines", lines)

    @property
    def ky_values(self):
        return np.array([line.ky for line in self.lines])

    @property
    def kx_values(self):
        return self.lines[0].kx if self.lines else np.array([])

    def samples(self):
        """(kx, ky, f_plus, f_minus, f_s) rows, ky outermost."""
        for line in self.lines:
            yield from line.rows()

    def stack(self, tau=None):
        """(ky, kx) array of F_tau, or of F_s when ``tau`` is None."""
        if tau is None:
            return np.array([line.f_s for line in self.lines])
        return np.array([line.for_branch(tau) for line in self.lines])


def curvature_map(
    params, protocols, mode=ReferenceMode.ADIABATIC, *, mapper=map, **options
):
    """Run one line per protocol through ``mapper`` and collect the map."""
    job = partial(_line_job, params, mode=mode, **options)
    lines = list(mapper(job, protocols))
    omega_t_over_pi = protocols[0].T * params.A / math.pi if protocols else math.nan
    return CurvatureMap(
        lines=tuple(lines),
        omega_t_over_pi=omega_t_over_pi,
        reference_mode=ReferenceMode(mode).value,
    )


def _line_job(params, protocol, mode, **options):
    return berry_curvature_lr(params, protocol, mode, **options)


def trapezoid_weights(values, name):
    """Periodic trapezoid weights for samples uniformly covering one period."""
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        msg = f"At least two {name} samples are needed"
        raise NonUniformSamplingError(msg, axis=name, count=int(values.size))
    steps = np.diff(values)
    spacing = float(steps.mean())
    if spacing <= 0 or np.max(np.abs(steps - spacing)) > SPACING_TOLERANCE:
        msg = f"{name} samples are not uniformly spaced"
        raise NonUniformSamplingError(msg, axis=name, spread=float(np.ptp(steps)))
    weights = np.full(values.size, spacing)
    span = values[-1] - values[0]
    if abs(span - 2.0 * math.pi) <= SPACING_TOLERANCE * values.size:
        # both ends are the same point of the zone
        weights[[0, -1]] *= 0.5
    elif abs(values.size * spacing - 2.0 * math.pi) > SPACING_TOLERANCE * values.size:
        msg = f"{name} samples do not cover the zone"
        raise NonUniformSamplingError(msg, axis=name, span=float(span))
    return weights


@dataclass(frozen=True)
class CurvatureIntegral:
    C_plus: float
    C_minus: float
    C_s: float


def integrate_curvature(curvature):
    """C_tau = (1/2 pi) int F_tau and C_s = (1/4 pi) int F_s over the zone."""
    kx = curvature.kx_values
    for line in curvature.lines:
        same_shape = line.kx.shape == kx.shape
        if not same_shape or np.max(np.abs(line.kx - kx)) > SPACING_TOLERANCE:
            msg = "ky lines were sampled at different kx"
            raise NonUniformSamplingError(msg, ky=line.ky)
    weights = np.outer(
        trapezoid_weights(curvature.ky_values, "ky"), trapezoid_weights(kx, "kx")
    )

    def integral(values):
        return math.fsum(np.ravel(weights * values))

    result = CurvatureIntegral(
        C_plus=integral(curvature.stack(1)) / (2.0 * math.pi),
        C_minus=integral(curvature.stack(-1)) / (2.0 * math.pi),
        C_s=integral(curvature.stack()) / (4.0 * math.pi),
    )
    logger.debug("Integrated curvature: %s", result)
    return result
