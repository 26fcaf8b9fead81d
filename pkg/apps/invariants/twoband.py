"""Closed-form Berry curvature of a single two-level block.

For H = B . sigma the lower band carries the curvature density
-1/2 B^.(d_kx B^ x d_ky B^), and the exact lattice flux through a plaquette is
minus half the signed solid angle spanned by the corner directions B^.
"""

import math

import numpy as np

from apps.bhz.hamiltonians import coefficient_derivatives
from apps.bhz.hamiltonians import coefficients


def two_band_curvature(params, k, tau):
    """Lower-band curvature density of block ``tau`` at ``k`` (g = 0 blocks)."""
    field = coefficients(params, k).for_block(tau)
    d_kx, d_ky = coefficient_derivatives(params, k, tau)
    norm = float(np.linalg.norm(field))
    return -0.5 * float(field @ np.cross(d_kx, d_ky)) / norm**3


def solid_angle(a, b, c):
    """Signed solid angle of the geodesic triangle with unit vertices a, b, c."""
    numerator = float(a @ np.cross(b, c))
    denominator = 1.0 + float(a @ b) + float(b @ c) + float(c @ a)
    return 2.0 * math.atan2(numerator, denominator)


def two_band_plaquette_flux(params, corners, tau):
    """Exact lattice flux of block ``tau`` through a plaquette, in (-pi, pi]."""
    directions = []
    for k in corners:
        field = coefficients(params, k).for_block(tau)
        directions.append(field / np.linalg.norm(field))
    d1, d2, d3, d4 = directions
    flux = -0.5 * (solid_angle(d1, d2, d3) + solid_angle(d1, d3, d4))
    wrapped = math.remainder(flux, 2.0 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


def two_band_chern(params, grid, tau):
    """Chern number of the lower band of block ``tau`` from the solid-angle fluxes."""
    fluxes = [
        two_band_plaquette_flux(params, grid.plaquette(r, n), tau)
        for r in range(grid.R)
        for n in range(grid.N)
    ]
    return math.fsum(fluxes) / (2.0 * math.pi)
