"""Microwave realization of the BHZ Hamiltonian on four hyperfine levels.

Tone k drives its (upper, lower) level pair from ``TONE_LEVELS`` with the
coupling (Omega_k / 2) exp(i w_k t) exp(i phi_k) |lower><upper| plus its
Hermitian conjugate. In the frame rotating with the tones this turns into the
time-independent matrix of ``rotating_frame_hamiltonian`` once the detunings
close. Tone 3 couples |+,E1> to |-,H1> and tone 4 couples |-,E1> to |+,H1>.
"""

import logging
import math

import numpy as np

from .exceptions import ClosureViolationError
from .exceptions import InvalidParametersError
from .hamiltonians import coefficients
from .params import SYNTHETIC_LEVEL_PATTERN
from .params import TONE_LEVELS
from .params import MicrowaveParams

logger = logging.getLogger(__name__)

CLOSURE_TOLERANCE = 1e-12
MIN_CARRIER_SCALE = 10.0


def lab_frame_hamiltonian(mw, t):
    """Bare-basis Hamiltonian at time ``t`` with all four tones switched on."""
    levels = mw.level_frequencies
    reference = levels[1]
    matrix = np.diag([level - reference for level in levels]).astype(np.complex128)
    for (upper, lower), rabi, carrier, phase in zip(
        TONE_LEVELS, mw.rabi, mw.carriers, mw.phases, strict=True
    ):
        coupling = 0.5 * rabi * np.exp(1j * (carrier * t + phase))
        matrix[lower, upper] += coupling
        matrix[upper, lower] += np.conj(coupling)
    return matrix


def frame_unitary(mw, t):
    """U(t) = diag(e^{-i w1 t}, 1, e^{-i w4 t}, e^{-i (w1 - w3) t})."""
    w1, _, w3, w4 = mw.carriers
    return np.diag(
        np.exp(-1j * np.array([w1, 0.0, w4, w1 - w3]) * t)
    ).astype(np.complex128)


def rotating_frame_hamiltonian(mw):
    """Time-independent Hamiltonian in the frame of the four tones.

    The diagonal is (-D1, D1, -D2, D2) / 2, which matches the exact frame
    transform up to a constant energy shift when all detunings are equal.
    """
    closure = mw.closure
    if abs(closure) > CLOSURE_TOLERANCE:
        msg = "Detunings do not close, the rotating frame is time dependent"
        raise ClosureViolationError(msg, delta_prime=closure)
    d1, d2, _, _ = mw.detunings
    matrix = np.diag([-d1, d1, -d2, d2]).astype(np.complex128)
    tones = zip(TONE_LEVELS, mw.rabi, mw.phases, strict=True)
    for (upper, lower), rabi, phase in tones:
        matrix[upper, lower] = rabi * np.exp(-1j * phase)
        matrix[lower, upper] = rabi * np.exp(1j * phase)
    return 0.5 * matrix


def synthetic_levels(scale, unit=1.0):
    """Level frequencies well separated from the Rabi scale ``unit``."""
    return tuple(scale * unit * value for value in SYNTHETIC_LEVEL_PATTERN)


def model_to_microwaves(params, k, synthetic_carrier_scale=50.0):
    """Tones whose rotating-frame Hamiltonian is half the Bloch Hamiltonian at k.

    The in-plane field of each block sets its pi-tone Rabi frequency and phase,
    the coupling g sets both cross tones, and every detuning equals -M(k) so
    that the E1 level sits at +M(k)/2.
    """
    if synthetic_carrier_scale < MIN_CARRIER_SCALE:
        msg = "Carrier scale must sit well above the Rabi scale"
        raise InvalidParametersError(
            msg, synthetic_carrier_scale=synthetic_carrier_scale
        )
    pair = coefficients(params, k)
    plus, minus = pair.b_plus, pair.b_minus
    detuning = -pair.mass
    mw = MicrowaveParams(
        rabi=(
            math.hypot(plus[0], plus[1]),
            math.hypot(minus[0], minus[1]),
            params.g,
            params.g,
        ),
        detunings=(detuning,) * 4,
        phases=(math.atan2(plus[1], plus[0]), math.atan2(minus[1], minus[0]), 0.0, 0.0),
        level_frequencies=synthetic_levels(synthetic_carrier_scale, params.A),
    )
    logger.debug("Microwave tones for k=(%.4f, %.4f): %s", k.kx, k.ky, mw)
    return mw
