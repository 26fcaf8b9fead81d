"""Tests for grids in Invariants App."""

import math

import numpy as np
from django.test import SimpleTestCase

from apps.invariants.exceptions import InvalidGridError
from apps.invariants.grids import BZGrid


class BZGridTestCase(SimpleTestCase):
    """Test cases for BZGrid."""

    def test_lattice_points(self):
        """Test k_r = -pi + 2 pi r / R with the centre at exactly zero."""
        grid = BZGrid(8, 12)
        np.testing.assert_allclose(
            grid.kx_values, -math.pi + 2 * math.pi * np.arange(8) / 8, atol=1e-15
        )
        self.assertEqual(grid.kx_values[4], 0.0)
        self.assertEqual(grid.ky_values[6], 0.0)
        self.assertEqual(len(list(grid.momenta())), 96)

    def test_indices_wrap(self):
        """Test grid indices wrap modulo R and N."""
        grid = BZGrid(8, 8)
        self.assertEqual(grid.momentum(8, -1), grid.momentum(0, 7))

    def test_plaquette_order(self):
        """Test the plaquette loop runs along kx first, then ky."""
        grid = BZGrid(8, 8)
        first, second, third, fourth = grid.plaquette(7, 0)
        self.assertEqual(first, grid.momentum(7, 0))
        self.assertEqual(second, grid.momentum(0, 0))
        self.assertEqual(third, grid.momentum(0, 1))
        self.assertEqual(fourth, grid.momentum(7, 1))

    def test_spacing(self):
        """Test the spacing is 2 pi over the number of divisions."""
        self.assertEqual(BZGrid(10, 20).spacing, (2 * math.pi / 10, math.pi / 10))

    def test_rejects_coarse_grid(self):
        """Test fewer than eight divisions are rejected."""
        with self.assertRaises(InvalidGridError):
            BZGrid(4, 60)
        with self.assertRaises(InvalidGridError):
            BZGrid(60, 7)
