"""Tests for the microwave frames in BHZ App."""

import math

import numpy as np
from django.test import SimpleTestCase

from apps.bhz.exceptions import ClosureViolationError
from apps.bhz.exceptions import InvalidParametersError
from apps.bhz.hamiltonians import hamiltonian
from apps.bhz.microwaves import frame_unitary
from apps.bhz.microwaves import lab_frame_hamiltonian
from apps.bhz.microwaves import model_to_microwaves
from apps.bhz.microwaves import rotating_frame_hamiltonian
from apps.bhz.microwaves import synthetic_levels
from apps.bhz.params import MicrowaveParams
from apps.bhz.params import ModelParams
from apps.bhz.params import Momentum


def tones(rabi=(0.7, 0.4, 0.2, 0.3), detunings=(0.1, 0.1, 0.1, 0.1), phases=None):
    return MicrowaveParams(
        rabi=rabi,
        detunings=detunings,
        phases=phases or (0.3, -1.2, 0.5, 2.0),
        level_frequencies=synthetic_levels(50.0),
    )


class LabFrameHamiltonianTestCase(SimpleTestCase):
    """Test cases for lab_frame_hamiltonian."""

    def test_drive_free_is_diagonal(self):
        """Test switching all tones off leaves the bare level splittings."""
        mw = tones(rabi=(0.0, 0.0, 0.0, 0.0))
        matrix = lab_frame_hamiltonian(mw, 1.3)
        levels = np.array(mw.level_frequencies) - mw.level_frequencies[1]
        np.testing.assert_allclose(matrix, np.diag(levels))

    def test_real_couplings_at_phase_free_instant(self):
        """Test t=0 with zero phases gives real couplings."""
        mw = tones(phases=(0.0, 0.0, 0.0, 0.0))
        matrix = lab_frame_hamiltonian(mw, 0.0)
        self.assertEqual(np.max(np.abs(matrix.imag)), 0.0)

    def test_hermitian(self):
        """Test Hermiticity holds at a generic instant."""
        matrix = lab_frame_hamiltonian(tones(), 0.731)
        self.assertEqual(np.max(np.abs(matrix - matrix.conj().T)), 0.0)


class RotatingFrameHamiltonianTestCase(SimpleTestCase):
    """Test cases for rotating_frame_hamiltonian."""

    def test_coupling_free(self):
        """Test zero Rabi frequencies give diag(-D1, D1, -D2, D2) / 2."""
        mw = tones(rabi=(0.0, 0.0, 0.0, 0.0), detunings=(0.4, -0.2, 0.1, 0.1))
        np.testing.assert_allclose(
            rotating_frame_hamiltonian(mw), np.diag([-0.2, 0.2, 0.1, -0.1])
        )

    def test_closure_violation(self):
        """Test a non-zero delta prime is rejected with its value."""
        mw = tones().with_detuning_offset(3, 0.01)
        with self.assertRaises(ClosureViolationError) as context:
            rotating_frame_hamiltonian(mw)
        self.assertAlmostEqual(context.exception.payload["delta_prime"], -0.01)

    def test_frame_transform_of_lab_hamiltonian(self):
        """Test U^dag H_lab U - i U^dag dU/dt is the rotating matrix up to a shift."""
        mw = tones()
        t = 0.37
        unitary = frame_unitary(mw, t)
        w1, _, w3, w4 = mw.carriers
        generator = np.diag([w1, 0.0, w4, w1 - w3])
        transformed = (
            unitary.conj().T @ lab_frame_hamiltonian(mw, t) @ unitary - generator
        )
        shift = -0.5 * mw.detunings[0] * np.eye(4)
        np.testing.assert_allclose(
            transformed, rotating_frame_hamiltonian(mw) + shift, atol=1e-10
        )


class ModelToMicrowavesTestCase(SimpleTestCase):
    """Test cases for model_to_microwaves."""

    def test_z_only_field(self):
        """Test a pure z field gives no pi-tone drive and detuning -M."""
        mw = model_to_microwaves(ModelParams(M=2.0), Momentum(0.0, 0.0))
        self.assertEqual(mw.rabi[0], 0.0)
        self.assertEqual(mw.detunings[0], -2.0)

    def test_x_only_field(self):
        """Test B+ = (1, 0, 0) gives unit Rabi frequency, zero phase and detuning."""
        mw = model_to_microwaves(ModelParams(M=2.0), Momentum(math.pi / 2, 0.0))
        self.assertAlmostEqual(mw.rabi[0], 1.0)
        self.assertAlmostEqual(mw.phases[0], 0.0)
        self.assertAlmostEqual(mw.detunings[0], 0.0)

    def test_cross_tones_carry_coupling(self):
        """Test both cross tones carry g with zero phase and the closure holds."""
        mw = model_to_microwaves(ModelParams(g=0.15), Momentum(0.3, -0.7))
        self.assertEqual(mw.rabi[2:], (0.15, 0.15))
        self.assertEqual(mw.phases[2:], (0.0, 0.0))
        self.assertEqual(mw.closure, 0.0)

    def test_roundtrip_is_half_hamiltonian(self):
        """Test the rotating frame of the mapped tones is half the Bloch Hamiltonian."""
        rng = np.random.default_rng(17)
        for _ in range(200):
            params = ModelParams(
                A=rng.uniform(0.5, 1.5),
                B=rng.uniform(-1.5, 1.5),
                M=rng.uniform(-3, 3),
                g=rng.uniform(0, 0.5),
            )
            k = Momentum(*rng.uniform(-math.pi, math.pi, size=2))
            mw = model_to_microwaves(params, k, synthetic_carrier_scale=20.0)
            np.testing.assert_allclose(
                rotating_frame_hamiltonian(mw),
                0.5 * hamiltonian(params, k),
                atol=1e-12,
            )

    def test_rejects_small_carrier_scale(self):
        """Test carriers must sit well above the Rabi scale."""
        with self.assertRaises(InvalidParametersError):
            model_to_microwaves(ModelParams(), Momentum(0.0, 0.0), 5.0)
