"""Initial-state preparation and propagation along the kx ramp.

States are 4-vectors in the basis {|+,E1>, |+,H1>, |-,E1>, |-,H1>} holding one
occupied state per pseudospin, so their squared norm is 2.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from apps.bhz.hamiltonians import PAULI
from apps.bhz.hamiltonians import block_slice
from apps.bhz.hamiltonians import clifford_components
from apps.bhz.hamiltonians import clifford_exponential
from apps.bhz.hamiltonians import propagator
from apps.bhz.params import Momentum
from apps.invariants.exceptions import EnergyGapClosedError
from apps.invariants.exceptions import SpinGapClosedError
from apps.invariants.spin import DEFAULT_GAP_FLOOR
from apps.invariants.spin import spin_split

from .choices import IntegrationScheme
from .exceptions import InitialStatePreparationError
from .exceptions import IntegratorError
from .exceptions import InvalidStateError

logger = logging.getLogger(__name__)

STATE_NORM = 2.0
INITIAL_NORM_TOLERANCE = 1e-8
DRIFT_TOLERANCE = 1e-6

# Gauss nodes and weights of the two-exponential fourth-order Magnus step.
GAUSS_NODES = (0.5 - math.sqrt(3.0) / 6.0, 0.5 + math.sqrt(3.0) / 6.0)
MAGNUS_WEIGHTS = (
    (3.0 - 2.0 * math.sqrt(3.0)) / 12.0,
    (3.0 + 2.0 * math.sqrt(3.0)) / 12.0,
)


@dataclass(frozen=True, eq=False)
class Snapshot:
    t: float
    kx: float
    psi: np.ndarray


@dataclass(frozen=True)
class InitialStateParameters:
    """Block-form description of an initial state.

    psi = alpha (cos th+/2, e^{i ph+} sin th+/2)
        + beta e^{i ph+-} (cos th-/2, e^{i ph-} sin th-/2)
    """

    alpha: float
    beta: float
    theta_plus: float
    theta_minus: float
    phi_plus: float
    phi_minus: float
    phi_plus_minus: float


def norm_squared(psi):
    return float(np.vdot(psi, psi).real)


def prepare_initial_state(
    params, ky, *, kx=-math.pi, gap_floor=DEFAULT_GAP_FLOOR
):
    """psi+ + psi- of the spin-split ground pair at the sweep start (kx, ky).

    The start is (-pi, ky) unless the protocol has a lead-in.
    """
    start = Momentum(kx, ky)
    try:
        pair = spin_split(params, start, gap_floor=gap_floor)
    except (EnergyGapClosedError, SpinGapClosedError) as exc:
        msg = "Cannot prepare the initial state at the sweep start"
        raise InitialStatePreparationError(
            msg, kx=float(kx), ky=float(ky), reason=exc.code
        ) from exc
    return pair.psi_plus + pair.psi_minus


def step_propagator(params, protocol, start, dt):
    """Unitary carrying the state from ``start`` to ``start + dt``."""
    ky = protocol.ky
    if protocol.scheme == IntegrationScheme.MIDPOINT:
        return propagator(params, Momentum(protocol.kx_at(start + 0.5 * dt), ky), dt)
    early, late = (
        clifford_components(params, Momentum(protocol.kx_at(start + node * dt), ky))
        for node in GAUSS_NODES
    )
    small, large = MAGNUS_WEIGHTS
    first = clifford_exponential(large * early + small * late, dt)
    second = clifford_exponential(small * early + large * late, dt)
    return second @ first


def propagate(params, protocol, psi0):
    """Evolve ``psi0`` along the ramp, one exact exponential per substep or two.

    Returns one snapshot per measurement stop.
    """
    psi = np.array(psi0, dtype=np.complex128)
    start_norm = norm_squared(psi)
    if abs(start_norm - STATE_NORM) > INITIAL_NORM_TOLERANCE:
        msg = "Initial state must have squared norm 2"
        raise InvalidStateError(msg, norm_squared=start_norm)

    lead_steps = protocol.lead_in_steps
    if lead_steps:
        lead_dt = protocol.lead_in_duration / lead_steps
        start = -protocol.lead_in_duration
        for lead_step in range(lead_steps):
            t = start + lead_step * lead_dt
            psi = step_propagator(params, protocol, t, lead_dt) @ psi

    dt = protocol.dt
    snapshots = []
    step = 0
    for t_meas in protocol.measurement_times():
        for _ in range(protocol.substeps_per_measurement):
            psi = step_propagator(params, protocol, step * dt, dt) @ psi
            step += 1
        drift = abs(norm_squared(psi) - STATE_NORM)
        if drift > DRIFT_TOLERANCE:
            msg = "State norm drifted during propagation"
            raise IntegratorError(msg, step=step, t=float(t_meas), drift=drift)
        snapshots.append(Snapshot(float(t_meas), protocol.kx_at(t_meas), psi.copy()))

    logger.debug(
        "Propagated ky=%.4f over %d steps, final norm drift %.2e",
        protocol.ky,
        step,
        abs(norm_squared(psi) - STATE_NORM),
    )
    return snapshots


def project_pseudospin(psi, tau):
    """Unnormalized amplitudes of block ``tau``."""
    return np.asarray(psi, dtype=np.complex128)[block_slice(tau)].copy()


def bloch_expectations(eta):
    """(<sx>, <sy>, <sz>) of a block state, scaling with its norm."""
    return tuple(float(np.vdot(eta, pauli @ eta).real) for pauli in PAULI)


def _block_angles(eta):
    norm = float(np.linalg.norm(eta))
    if norm == 0.0:
        return 0.0, 0.0, 0.0
    ratio = min(1.0, abs(eta[0]) / norm)
    return norm, 2.0 * math.acos(ratio), float(np.angle(eta[1]) - np.angle(eta[0]))


def initial_state_parameters(psi0):
    """Block-form parameters of an initial state, up to a global phase."""
    upper = project_pseudospin(psi0, 1)
    lower = project_pseudospin(psi0, -1)
    alpha, theta_plus, phi_plus = _block_angles(upper)
    beta, theta_minus, phi_minus = _block_angles(lower)
    return InitialStateParameters(
        alpha=alpha,
        beta=beta,
        theta_plus=theta_plus,
        theta_minus=theta_minus,
        phi_plus=phi_plus,
        phi_minus=phi_minus,
        phi_plus_minus=float(np.angle(lower[0]) - np.angle(upper[0])),
    )
