"""Tests for linear-response curvature in Dynamics App."""

import math

import numpy as np
from django.test import SimpleTestCase

from apps.bhz.hamiltonians import coefficients
from apps.bhz.params import ModelParams
from apps.bhz.params import Momentum
from apps.dynamics.choices import ReferenceMode
from apps.dynamics.curvature import CurvatureLine
from apps.dynamics.curvature import CurvatureMap
from apps.dynamics.curvature import adiabatic_reference
from apps.dynamics.curvature import berry_curvature_lr
from apps.dynamics.curvature import curvature_map
from apps.dynamics.curvature import generalized_force
from apps.dynamics.curvature import integrate_curvature
from apps.dynamics.exceptions import InvalidProtocolError
from apps.dynamics.exceptions import NonUniformSamplingError
from apps.dynamics.protocols import SweepProtocol
from apps.dynamics.protocols import ky_line_set
from apps.invariants.twoband import two_band_curvature

TOPOLOGICAL = ModelParams(A=1.0, B=1.0, M=2.0, g=0.0)
COUPLED = ModelParams(A=1.0, B=1.0, M=2.0, g=0.15)
LEAD_IN = math.pi / 2
KX = -math.pi + 2 * math.pi * np.arange(1, 61) / 60


def ramped_line(params, ky, omega_t_over_pi, **options):
    protocol = SweepProtocol.from_drive(ky, omega_t_over_pi, lead_in=LEAD_IN, **options)
    return berry_curvature_lr(params, protocol)


def spin_chern_lr(params, omega_t_over_pi, mode=ReferenceMode.ADIABATIC, **options):
    protocols = [
        SweepProtocol.from_drive(ky, omega_t_over_pi, lead_in=LEAD_IN, **options)
        for ky in ky_line_set()
    ]
    return integrate_curvature(curvature_map(params, protocols, mode)).C_s


def constant_map(f_plus, f_minus, ky_values=None, kx=KX):
    ky_values = ky_line_set() if ky_values is None else ky_values
    lines = [
        CurvatureLine(
            ky=float(ky),
            kx=kx,
            f_plus=np.full(kx.size, f_plus),
            f_minus=np.full(kx.size, f_minus),
        )
        for ky in ky_values
    ]
    return CurvatureMap(lines=tuple(lines))


class GeneralizedForceTestCase(SimpleTestCase):
    """Test cases for generalized_force."""

    def test_zero_ky(self):
        """Test only A <sy> survives at ky=0."""
        self.assertEqual(generalized_force(TOPOLOGICAL, 0.0, (0.3, -0.4, 0.9)), -0.4)

    def test_quarter_ky(self):
        """Test only 2B <sz> survives at ky=pi/2."""
        self.assertAlmostEqual(
            generalized_force(TOPOLOGICAL, math.pi / 2, (0.3, -0.4, 0.9)),
            1.8,
            places=15,
        )


class AdiabaticReferenceTestCase(SimpleTestCase):
    """Test cases for adiabatic_reference."""

    def test_constant_reference(self):
        """Test the constant mode is 4B sin ky."""
        k = Momentum(0.4, 0.0)
        constant = ReferenceMode.CONSTANT
        self.assertEqual(adiabatic_reference(TOPOLOGICAL, k, 1, constant), 0.0)
        k = Momentum(0.4, 1.0)
        self.assertAlmostEqual(
            adiabatic_reference(TOPOLOGICAL, k, -1, "paper-constant"), 4 * math.sin(1.0)
        )

    def test_adiabatic_ground_state(self):
        """Test g=0 matches the force on the Bloch vector -B/|B|."""
        rng = np.random.default_rng(6)
        for _ in range(20):
            k = Momentum(*rng.uniform(-math.pi, math.pi, size=2))
            for tau in (1, -1):
                field = coefficients(TOPOLOGICAL, k).for_block(tau)
                unit = field / np.linalg.norm(field)
                expected = -(math.cos(k.ky) * unit[1] + 2 * math.sin(k.ky) * unit[2])
                self.assertAlmostEqual(
                    adiabatic_reference(TOPOLOGICAL, k, tau), expected, delta=1e-10
                )

    def test_initial_mode_uses_sweep_start(self):
        """Test the initial mode evaluates at kx=-pi whatever kx is."""
        self.assertAlmostEqual(
            adiabatic_reference(COUPLED, Momentum(1.2, 0.5), 1, ReferenceMode.INITIAL),
            adiabatic_reference(COUPLED, Momentum(-math.pi, 0.5), 1),
            places=14,
        )


class BerryCurvatureLrTestCase(SimpleTestCase):
    """Test cases for berry_curvature_lr."""

    def test_line_structure(self):
        """Test one sample per stop with F_s = F+ - F-."""
        protocol = SweepProtocol.from_drive(0.6, 24.0, steps=1200)
        line = berry_curvature_lr(COUPLED, protocol)
        np.testing.assert_allclose(line.kx, KX, atol=1e-12)
        np.testing.assert_array_equal(line.f_s, line.f_plus - line.f_minus)
        self.assertTrue(np.all(np.isfinite(line.f_s)))
        self.assertGreater(line.initial_parameters.alpha, 0.0)
        rows = list(line.rows())
        self.assertEqual(len(rows), 60)
        self.assertEqual(rows[0][1], 0.6)

    def test_smoothing(self):
        """Test the boxcar never widens the spread of the samples."""
        protocol = SweepProtocol.from_drive(0.0, 24.0, steps=1200)
        raw = berry_curvature_lr(TOPOLOGICAL, protocol)
        smooth = berry_curvature_lr(TOPOLOGICAL, protocol, smoothing_window=5)
        self.assertLessEqual(np.ptp(smooth.f_plus), np.ptp(raw.f_plus))
        self.assertAlmostEqual(smooth.f_plus.mean(), raw.f_plus.mean(), places=12)

    def test_frozen_ramp(self):
        """Test a frozen ramp has no linear response."""
        protocol = SweepProtocol.from_drive(0.0, 24.0, frozen=True)
        with self.assertRaises(InvalidProtocolError):
            berry_curvature_lr(TOPOLOGICAL, protocol)

    def test_map_metadata(self):
        """Test the map remembers its drive and reference mode."""
        protocols = [
            SweepProtocol.from_drive(ky, 8.0, steps=480, meas_count=8)
            for ky in ky_line_set(3)
        ]
        curvature = curvature_map(TOPOLOGICAL, protocols)
        self.assertAlmostEqual(curvature.omega_t_over_pi, 8.0)
        self.assertEqual(curvature.reference_mode, "adiabatic")

    def test_coupled_spin_chern_number(self):
        """Test 11 lines at Omega T = 24 pi give C_s = 1 at M=2B, g=0.15A."""
        self.assertLessEqual(abs(spin_chern_lr(COUPLED, 24.0) - 1.0), 0.1)

    def test_mirror_symmetry(self):
        """Test F_s on the ky=0 line is even in kx at g=0."""
        f_s = ramped_line(TOPOLOGICAL, 0.0, 24.0).f_s[:59]
        self.assertLess(np.max(np.abs(f_s - f_s[::-1])), 0.05)

    def test_time_reversal_pair(self):
        """Test F+ at kx equals -F- at -kx for decoupled blocks."""
        for ky, omega_t_over_pi in ((0.0, 24.0), (0.4 * math.pi, 48.0)):
            with self.subTest(ky=ky):
                line = ramped_line(TOPOLOGICAL, ky, omega_t_over_pi)
                mirrored = -line.f_minus[:59][::-1]
                self.assertLess(np.max(np.abs(line.f_plus[:59] - mirrored)), 0.05)
                self.assertLess(abs(line.f_plus[59] + line.f_minus[59]), 0.05)

    def test_slow_ramp_limit(self):
        """Test Omega T = 192 pi gives the two-band curvature at the zone center."""
        line = ramped_line(TOPOLOGICAL, 0.0, 192.0)
        center = int(np.argmin(np.abs(line.kx)))
        for tau in (1, -1):
            expected = two_band_curvature(TOPOLOGICAL, Momentum(0.0, 0.0), tau)
            self.assertAlmostEqual(
                line.for_branch(tau)[center], expected, delta=0.05 * abs(expected)
            )

    def test_sudden_start_oscillates(self):
        """Test a ramp without lead-in misses the zone-center curvature."""
        protocol = SweepProtocol.from_drive(0.0, 96.0)
        line = berry_curvature_lr(TOPOLOGICAL, protocol)
        center = int(np.argmin(np.abs(line.kx)))
        expected = two_band_curvature(TOPOLOGICAL, Momentum(0.0, 0.0), 1)
        self.assertGreater(abs(line.f_plus[center] - expected), 0.05)

    def test_reference_modes_agree(self):
        """Test the three reference modes give the same C_s at Omega T = 96 pi."""
        adiabatic = spin_chern_lr(TOPOLOGICAL, 96.0, steps=2400)
        for mode in (ReferenceMode.INITIAL, ReferenceMode.CONSTANT):
            with self.subTest(mode=mode):
                self.assertAlmostEqual(
                    spin_chern_lr(TOPOLOGICAL, 96.0, mode, steps=2400),
                    adiabatic,
                    delta=1e-6,
                )


class RampConvergenceTestCase(SimpleTestCase):
    """Test cases for C_s as the ramp slows down."""

    def test_converges_with_slower_ramps(self):
        """Test |C_s - 1| stays small and never grows by more than 0.02."""
        errors = [
            abs(spin_chern_lr(TOPOLOGICAL, omega_t_over_pi) - 1.0)
            for omega_t_over_pi in (12.0, 24.0, 48.0, 96.0)
        ]
        self.assertLessEqual(errors[1], 0.1)
        for slower, faster in zip(errors[1:], errors[:-1], strict=True):
            self.assertLessEqual(slower, faster + 0.02)
        self.assertLess(errors[-1], 0.02)

    def test_transition_sharpens(self):
        """Test the C_s step across M = 0 grows from a fast to a slow ramp."""
        steps = {}
        for omega_t_over_pi in (6.0, 48.0):
            upper, lower = (
                spin_chern_lr(
                    ModelParams(A=1.0, B=1.0, M=mass, g=0.0),
                    omega_t_over_pi,
                    meas_count=240,
                )
                for mass in (0.4, -0.4)
            )
            steps[omega_t_over_pi] = upper - lower
        self.assertGreater(steps[48.0] - steps[6.0], 0.05)
        self.assertLess(abs(steps[48.0] - 1.0), 0.1)


class CurvatureMapTestCase(SimpleTestCase):
    """Test cases for CurvatureMap."""

    def test_lines_sorted_by_ky(self):
        """Test lines come out ordered by ky whatever order they arrive in."""
        curvature = constant_map(0.0, 0.0, ky_values=[1.0, -1.0, 0.0])
        np.testing.assert_array_equal(curvature.ky_values, [-1.0, 0.0, 1.0])
        rows = list(curvature.samples())
        self.assertEqual(len(rows), 180)
        self.assertEqual(rows[0][:2], (KX[0], -1.0))

    def test_stack(self):
        """Test the stacked F_s array has one row per ky line."""
        curvature = constant_map(0.5, -0.25)
        self.assertEqual(curvature.stack().shape, (11, 60))
        np.testing.assert_array_equal(curvature.stack(), 0.75)


class IntegrateCurvatureTestCase(SimpleTestCase):
    """Test cases for integrate_curvature."""

    def test_constant_map(self):
        """Test F_s = 1/pi integrates to C_s = 1."""
        half = 1 / (2 * math.pi)
        result = integrate_curvature(constant_map(half, -half))
        self.assertAlmostEqual(result.C_s, 1.0, delta=1e-12)
        self.assertAlmostEqual(result.C_plus, 1.0, delta=1e-12)
        self.assertAlmostEqual(result.C_minus, -1.0, delta=1e-12)

    def test_zero_map(self):
        """Test a vanishing map integrates to zero."""
        self.assertEqual(integrate_curvature(constant_map(0.0, 0.0)).C_s, 0.0)

    def test_open_ky_set(self):
        """Test ky lines without a repeated end point use plain periodic weights."""
        ky_values = -math.pi + 2 * math.pi * np.arange(10) / 10
        result = integrate_curvature(
            constant_map(1 / (2 * math.pi), 0.0, ky_values=ky_values)
        )
        self.assertAlmostEqual(result.C_plus, 1.0, delta=1e-12)

    def test_non_uniform_ky(self):
        """Test unevenly spaced lines are rejected."""
        with self.assertRaises(NonUniformSamplingError):
            ky_values = [-math.pi, 0.0, 0.5, math.pi]
            integrate_curvature(constant_map(0.0, 0.0, ky_values=ky_values))

    def test_partial_zone(self):
        """Test lines that stop short of the zone are rejected."""
        with self.assertRaises(NonUniformSamplingError):
            integrate_curvature(constant_map(0.0, 0.0, ky_values=[-1.0, 0.0, 1.0]))

    def test_mismatched_kx(self):
        """Test lines sampled at different kx are rejected."""
        lines = constant_map(0.0, 0.0).lines
        shifted = CurvatureLine(
            ky=2.0, kx=KX + 0.01, f_plus=lines[0].f_plus, f_minus=lines[0].f_minus
        )
        with self.assertRaises(NonUniformSamplingError):
            integrate_curvature(CurvatureMap(lines=(*lines, shifted)))
