"""Bloch-vector reconstruction from projective population measurements.

Only the two E1 levels are read out directly. The H1 populations follow from
repeating the readout after pi swaps, and the transverse Bloch components
from repeating the whole sequence after pi/2 analysis pulses. The
reconstructed vectors use the convention <sz>' = 2 P_E - 1, which differs
from the direct expectation value when a block does not carry unit weight.
"""

import logging
import math
from dataclasses import astuple
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from apps.bhz.hamiltonians import SIGMA_Z
from apps.bhz.hamiltonians import coefficients
from apps.bhz.params import Momentum
from apps.dynamics.evolution import STATE_NORM
from apps.dynamics.evolution import norm_squared
from apps.dynamics.exceptions import InvalidStateError
from apps.linalg.dense import unitary_exp

from .exceptions import InconsistentDataError
from .pulses import SWAP_CROSS
from .pulses import SWAP_PLUS_BLOCK
from .pulses import half_pi_rotation
from .pulses import pi_swap

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-8
RANGE_TOLERANCE = 1e-9

# Rows: P+E + P-E, P+H + P-E, P-E + P-H and the total.
UNFOLDING = np.array(
    [
        [1.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 1.0, 0.0],
        [0.0, 0.0, 1.0, 1.0],
        [1.0, 1.0, 1.0, 1.0],
    ]
)


@dataclass(frozen=True)
class PopulationQuad:
    P_plus_E: float
    P_plus_H: float
    P_minus_E: float
    P_minus_H: float

    def __iter__(self):
        return iter(astuple(self))

    @property
    def total(self):
        return math.fsum(self)

    def for_block(self, tau):
        """(P_E, P_H) of pseudospin ``tau``."""
        if tau > 0:
            return self.P_plus_E, self.P_plus_H
        return self.P_minus_E, self.P_minus_H


@dataclass(frozen=True)
class FrameAngle:
    phi0: float

    def __float__(self):
        return self.phi0


def _checked(psi):
    psi = np.asarray(psi, dtype=np.complex128)
    norm = norm_squared(psi)
    if abs(norm - STATE_NORM) > NORM_TOLERANCE:
        msg = "Measured state must have squared norm 2"
        raise InvalidStateError(msg, norm_squared=norm)
    return psi


def measure_populations(psi):
    """Squared moduli of the four amplitudes in basis order."""
    return PopulationQuad(*(float(value) for value in np.abs(_checked(psi)) ** 2))


def _e1_readout(psi):
    populations = np.abs(psi) ** 2
    return float(populations[0] + populations[2])


def projective_sequence(psi):
    """E1 readouts directly, after the +E1/+H1 swap and after the +E1/-H1 swap."""
    psi = _checked(psi)
    return (
        _e1_readout(psi),
        _e1_readout(pi_swap(*SWAP_PLUS_BLOCK) @ psi),
        _e1_readout(pi_swap(*SWAP_CROSS) @ psi),
    )


def solve_populations(p_z1, p_z2, p_z3):
    """Invert the three readouts together with the total population 2."""
    solution = np.linalg.solve(UNFOLDING, np.array([p_z1, p_z2, p_z3, STATE_NORM]))
    if np.any(solution < -RANGE_TOLERANCE) or np.any(
        solution > STATE_NORM + RANGE_TOLERANCE
    ):
        msg = "Unfolded populations are outside [0, 2]"
        raise InconsistentDataError(msg, populations=tuple(solution.tolist()))
    return PopulationQuad(*(float(value) for value in solution))


def _sz_prime(psi, tau):
    populations = solve_populations(*projective_sequence(psi))
    return 2.0 * populations.for_block(tau)[0] - 1.0


def reconstruct_bloch(psi):
    """Lab-frame triples <s>' per pseudospin, keyed by tau."""
    psi = _checked(psi)
    rotated = {
        (axis, sign): half_pi_rotation(axis, sign) @ psi
        for axis in ("x", "y")
        for sign in (1, -1)
    }
    triples = {}
    for tau in (1, -1):
        x = 0.5 * (_sz_prime(rotated["y", -1], tau) - _sz_prime(rotated["y", 1], tau))
        y = 0.5 * (_sz_prime(rotated["x", 1], tau) - _sz_prime(rotated["x", -1], tau))
        triples[tau] = (x, y, _sz_prime(psi, tau))
    return triples


def population_convention(direct, block_norm_squared):
    """Map a direct, unnormalized expectation triple onto <sz>' = 2 P_E - 1."""
    x, y, z = direct
    return (x, y, z + block_norm_squared - 1.0)


def frame_rotation(bloch, phi0):
    """Rotate a lab-frame triple about z by ``phi0`` into the rotating frame."""
    angle = float(phi0)
    x, y, z = bloch
    cosine, sine = math.cos(angle), math.sin(angle)
    return (cosine * x - sine * y, sine * x + cosine * y, z)


def frame_angle(params, protocol, t=None):
    """phi0 = 2 int_0^t Bz(kx(s), ky) ds by trapezoid on the substep grid.

    The factor 2 converts the reduced-unit clock to the experiment clock.
    """
    t = protocol.T if t is None else float(t)
    intervals = max(1, math.ceil(t / protocol.dt - 1e-9))
    times = np.linspace(0.0, t, intervals + 1)
    masses = [
        coefficients(params, Momentum(protocol.kx_at(s), protocol.ky)).mass
        for s in times
    ]
    return FrameAngle(2.0 * float(trapezoid(masses, times)))


def to_atomic_frame(psi, phi0):
    """The state seen by the readout, each block rotated by exp(i phi0/2 sz)."""
    block = unitary_exp(SIGMA_Z, -0.5 * float(phi0))
    rotated = np.array(psi, dtype=np.complex128)
    rotated[:2] = block @ rotated[:2]
    rotated[2:] = block @ rotated[2:]
    return rotated
