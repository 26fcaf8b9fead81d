"""Analysis pulses applied before the population readout."""

import math
from functools import cache

import numpy as np
from scipy.linalg import block_diag

from apps.bhz.hamiltonians import SIGMA_X
from apps.bhz.hamiltonians import SIGMA_Y
from apps.linalg.dense import unitary_exp

# Level pairs swapped by the pi pulses of the readout sequence.
SWAP_PLUS_BLOCK = (0, 1)
SWAP_CROSS = (0, 3)

ROTATION_AXES = {"x": SIGMA_X, "y": SIGMA_Y}


def pi_swap(first, second):
    """Resonant pi pulse -i sigma_x on the two levels, identity elsewhere."""
    unitary = np.eye(4, dtype=np.complex128)
    unitary[first, first] = unitary[second, second] = 0.0
    unitary[first, second] = unitary[second, first] = -1j
    return unitary


@cache
def half_pi_rotation(axis, sign):
    """chi_axis(sign pi/2) = exp(-i sign (pi/4) sigma_axis) on both blocks."""
    block = unitary_exp(ROTATION_AXES[axis], sign * math.pi / 4.0)
    unitary = block_diag(block, block)
    unitary.flags.writeable = False
    return unitary
