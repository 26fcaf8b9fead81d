"""Occupied-band projection and the projected pseudospin operator.

The spin operator resolving the two pseudospin sectors is
diag(+1, +1, -1, -1) in the basis {|+,E1>, |+,H1>, |-,E1>, |-,H1>}.
``ORBITAL_Z`` is the orbital operator diag(+1, -1, +1, -1); it is kept so the
two readings can be compared, and it never separates the sectors.
"""

import logging
from dataclasses import dataclass

import numpy as np

from apps.bhz.hamiltonians import GapMinimum
from apps.bhz.hamiltonians import hamiltonian
from apps.linalg.dense import hermitian_eigh

from .exceptions import EnergyGapClosedError
from .exceptions import SpinGapClosedError

logger = logging.getLogger(__name__)

DEFAULT_GAP_FLOOR = 1e-6


def _frozen_diagonal(values):
    array = np.diag(values).astype(np.complex128)
    array.flags.writeable = False
    return array


PSEUDOSPIN_Z = _frozen_diagonal([1.0, 1.0, -1.0, -1.0])
ORBITAL_Z = _frozen_diagonal([1.0, -1.0, 1.0, -1.0])


@dataclass(frozen=True, eq=False)
class OccupiedStates:
    """Orthonormal basis of the two lowest bands and their common energy."""

    phi_1: np.ndarray
    phi_2: np.ndarray
    energy: float

    def __iter__(self):
        yield self.phi_1
        yield self.phi_2
        yield self.energy

    @property
    def basis(self):
        return np.column_stack([self.phi_1, self.phi_2])


@dataclass(frozen=True, eq=False)
class SpinSplitPair:
    """Occupied states of definite projected spin, tau=+ carrying the larger value."""

    psi_plus: np.ndarray
    psi_minus: np.ndarray
    spin_values: tuple[float, float]
    occupied_energy: float

    def for_branch(self, tau):
        return self.psi_plus if tau > 0 else self.psi_minus

    @property
    def splitting(self):
        return self.spin_values[0] - self.spin_values[1]


def occupied_states(params, k, gap_floor=DEFAULT_GAP_FLOOR):
    """Two lowest eigenvectors of H(k) in whatever gauge the eigensolver returns."""
    eigenvalues, vectors = hermitian_eigh(hamiltonian(params, k))
    gap = float(eigenvalues[2] - eigenvalues[0])
    if gap < gap_floor:
        logger.debug("Energy gap %.3e closed at (%.4f, %.4f)", gap, *k)
        msg = "Energy gap is closed"
        raise EnergyGapClosedError(msg, k=tuple(k), gap=gap)
    return OccupiedStates(vectors[:, 0], vectors[:, 1], float(eigenvalues[0]))


def spin_matrix(phi_1, phi_2, spin_operator=PSEUDOSPIN_Z):
    """2x2 matrix <phi_j|S|phi_l> of the spin operator on the occupied pair."""
    basis = np.column_stack([phi_1, phi_2])
    matrix = basis.conj().T @ spin_operator @ basis
    return 0.5 * (matrix + matrix.conj().T)


def fix_gauge(state):
    """Make the largest-magnitude amplitude real and positive."""
    pivot = state[int(np.argmax(np.abs(state)))]
    return state * (np.conj(pivot) / abs(pivot))


def _split(params, k, gap_floor, spin_operator, mixer):
    occupied = occupied_states(params, k, gap_floor)
    basis = occupied.basis
    if mixer is not None:
        basis = basis @ mixer
    matrix = spin_matrix(basis[:, 0], basis[:, 1], spin_operator)
    values, vectors = hermitian_eigh(matrix)
    return SpinSplitPair(
        psi_plus=fix_gauge(basis @ vectors[:, 1]),
        psi_minus=fix_gauge(basis @ vectors[:, 0]),
        spin_values=(float(values[1]), float(values[0])),
        occupied_energy=occupied.energy,
    )


def spin_split(
    params, k, *, gap_floor=DEFAULT_GAP_FLOOR, spin_operator=PSEUDOSPIN_Z, mixer=None
):
    """Occupied states of definite projected spin at ``k``.

    ``mixer`` is an optional 2x2 unitary applied to the occupied pair before
    the spin matrix is built; the result must not depend on it beyond phases.
    """
    pair = _split(params, k, gap_floor, spin_operator, mixer)
    if pair.splitting < gap_floor:
        logger.debug("Spin gap %.3e closed at (%.4f, %.4f)", pair.splitting, *k)
        msg = "Spin spectrum gap is closed"
        raise SpinGapClosedError(msg, k=tuple(k), spin_gap=pair.splitting)
    return pair


def spin_gap(params, grid, *, gap_floor=DEFAULT_GAP_FLOOR, spin_operator=PSEUDOSPIN_Z):
    """Smallest splitting of the projected spin spectrum over the grid."""
    best = None
    for point in grid.momenta():
        splitting = _split(params, point, gap_floor, spin_operator, None).splitting
        if best is None or splitting < best.value:
            best = GapMinimum(splitting, point)
    logger.debug("Spin gap %.3e at (%.4f, %.4f)", best.value, *best.at)
    return best
