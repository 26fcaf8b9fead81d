"""Bloch Hamiltonians, Gamma matrices and spectra of the BHZ model.

Basis order is fixed everywhere as {|+,E1>, |+,H1>, |-,E1>, |-,H1>}: indices
0, 1 form the S+ block and 2, 3 the S- block, with the E1 level first in
each block.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .choices import Pseudospin
from .params import CoefficientPair
from .params import Momentum

logger = logging.getLogger(__name__)


def _frozen(array):
    array = np.asarray(array, dtype=np.complex128)
    array.flags.writeable = False
    return array


IDENTITY_2 = _frozen(np.eye(2))
SIGMA_X = _frozen([[0, 1], [1, 0]])
SIGMA_Y = _frozen([[0, -1j], [1j, 0]])
SIGMA_Z = _frozen([[1, 0], [0, -1]])
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

BLOCK_SLICES = {Pseudospin.PLUS: slice(0, 2), Pseudospin.MINUS: slice(2, 4)}


def block_slice(tau):
    """Amplitude indices of pseudospin block ``tau``."""
    return BLOCK_SLICES[Pseudospin(tau)]


def block_diagonal(upper, lower):
    zeros = np.zeros((2, 2), dtype=np.complex128)
    return np.block([[upper, zeros], [zeros, lower]])


@dataclass(frozen=True)
class GapMinimum:
    """Minimum of a gap over a grid together with where it occurs."""

    value: float
    at: Momentum

    def __float__(self):
        return self.value


def coefficients(params, k):
    """Field vectors B+ and B- at momentum ``k``."""
    kx, ky = k
    mass = params.M - 2.0 * params.B * (2.0 - math.cos(kx) - math.cos(ky))
    sin_x = params.A * math.sin(kx)
    sin_y = params.A * math.sin(ky)
    return CoefficientPair(
        b_plus=np.array([sin_x, -sin_y, mass]),
        b_minus=np.array([-sin_x, -sin_y, mass]),
    )


def coefficient_derivatives(params, k, tau):
    """(dB/dkx, dB/dky) of the field vector of block ``tau``."""
    kx, ky = k
    sign = 1.0 if tau > 0 else -1.0
    d_kx = np.array(
        [sign * params.A * math.cos(kx), 0.0, -2.0 * params.B * math.sin(kx)]
    )
    d_ky = np.array(
        [0.0, -params.A * math.cos(ky), -2.0 * params.B * math.sin(ky)]
    )
    return d_kx, d_ky


def bloch_hamiltonian(field):
    """Two-level Hamiltonian B . sigma."""
    return field[0] * SIGMA_X + field[1] * SIGMA_Y + field[2] * SIGMA_Z


def hamiltonian(params, k):
    """Four-band Bloch Hamiltonian [[H+, g sx], [g sx, H-]]."""
    pair = coefficients(params, k)
    coupling = params.g * SIGMA_X
    return np.block(
        [
            [bloch_hamiltonian(pair.b_plus), coupling],
            [coupling, bloch_hamiltonian(pair.b_minus)],
        ]
    )


def eigenvalues_closed_form(params, k):
    """Ascending spectrum (-E, -E, E, E) with E = sqrt(|B|^2 + g^2)."""
    pair = coefficients(params, k)
    energy = math.sqrt(float(pair.b_plus @ pair.b_plus) + params.g**2)
    return np.array([-energy, -energy, energy, energy])


def energy_gap(params, grid):
    """Smallest direct gap 2|E1| over the grid, located at its k-point."""
    best = None
    for point in grid.momenta():
        gap = 2.0 * eigenvalues_closed_form(params, point)[-1]
        if best is None or gap < best.value:
            best = GapMinimum(gap, point)
    logger.debug("Energy gap %.3e at (%.4f, %.4f)", best.value, *best.at)
    return best


def gamma_matrices():
    """Gamma_x, Gamma_y, Gamma_z as printed for the force decomposition.

    Gamma_y carries blocks [[0, i], [-i, 0]], which is minus the standard
    sigma_y per block.
    """
    gamma_y_block = np.array([[0, 1j], [-1j, 0]])
    gamma_x = block_diagonal(SIGMA_X, SIGMA_X)
    gamma_y = block_diagonal(gamma_y_block, gamma_y_block)
    gamma_z = np.diag([1.0, -1.0, 1.0, -1.0]).astype(np.complex128)
    return gamma_x, gamma_y, gamma_z


def dky_hamiltonian(params, k):
    """Exact dH/dky = A cos ky Gamma_y - 2B sin ky Gamma_z."""
    _, gamma_y, gamma_z = gamma_matrices()
    return (
        params.A * math.cos(k.ky) * gamma_y
        - 2.0 * params.B * math.sin(k.ky) * gamma_z
    )


# Mutually anticommuting matrices with H(k) = sum_j c_j(k) CLIFFORD[j].
CLIFFORD = tuple(
    _frozen(np.kron(outer, inner))
    for outer, inner in (
        (SIGMA_Z, SIGMA_X),
        (IDENTITY_2, SIGMA_Y),
        (IDENTITY_2, SIGMA_Z),
        (SIGMA_X, SIGMA_X),
    )
)


def clifford_components(params, k):
    """Coefficients (A sin kx, -A sin ky, M(k), g) of H(k) on ``CLIFFORD``."""
    pair = coefficients(params, k)
    return np.array([pair.b_plus[0], pair.b_plus[1], pair.mass, params.g])


def clifford_exponential(components, dt):
    """exp(-i dt sum_j c_j CLIFFORD[j]) in closed form; the sum squares to |c|^2."""
    norm = float(np.linalg.norm(components))
    generator = sum(
        value * matrix for value, matrix in zip(components, CLIFFORD, strict=True)
    )
    return (
        math.cos(norm * dt) * np.eye(4, dtype=np.complex128)
        - 1j * dt * np.sinc(norm * dt / math.pi) * generator
    )


def propagator(params, k, dt):
    """exp(-i H(k) dt) for a frozen momentum."""
    return clifford_exponential(clifford_components(params, k), dt)
