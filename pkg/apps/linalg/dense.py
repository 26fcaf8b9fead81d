"""Dense complex linear algebra for the 2x2 and 4x4 matrices of the model.

The eigensolver is a cyclic complex Jacobi iteration. Each rotation first
removes the phase of the pivot element, then applies a real plane rotation,
so the accumulated transform is unitary and the returned eigenvectors are
orthonormal even inside exactly degenerate clusters.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateInputError
from .exceptions import DimensionError
from .exceptions import EigenSolverError
from .exceptions import NotHermitianError

logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = (2, 4)
HERMITIAN_TOLERANCE = 1e-12
OFF_DIAGONAL_TOLERANCE = 1e-13
DEGENERACY_TOLERANCE = 1e-9
PIVOT_FLOOR = 1e-10
MAX_SWEEPS = 64


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues with their orthonormal eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __iter__(self):
        yield self.eigenvalues
        yield self.eigenvectors

    @property
    def scale(self):
        return max(1.0, float(np.max(np.abs(self.eigenvalues))))

    def clusters(self):
        """Group eigenvalue indices whose values are degenerate."""
        groups = [[0]]
        threshold = DEGENERACY_TOLERANCE * self.scale
        for index in range(1, len(self.eigenvalues)):
            if self.eigenvalues[index] - self.eigenvalues[groups[-1][-1]] < threshold:
                groups[-1].append(index)
            else:
                groups.append([index])
        return groups

    def reconstruct(self):
        vectors = self.eigenvectors
        return (vectors * self.eigenvalues) @ vectors.conj().T


def as_hermitian(matrix):
    """Return ``matrix`` as a complex array after checking the eigensolver contract."""
    array = np.asarray(matrix, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        msg = f"Expected a square matrix, got shape {array.shape}"
        raise DimensionError(msg, shape=array.shape)
    if array.shape[0] not in SUPPORTED_DIMENSIONS:
        msg = f"Only {SUPPORTED_DIMENSIONS} dimensional matrices are supported"
        raise DimensionError(msg, dim=array.shape[0])
    asymmetry = float(np.max(np.abs(array - array.conj().T)))
    if asymmetry >= HERMITIAN_TOLERANCE:
        msg = "Matrix is not Hermitian"
        raise NotHermitianError(msg, max_asymmetry=asymmetry)
    return array


def _off_diagonal_norm(matrix):
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def _jacobi_rotation(matrix, p, q):
    """Unitary that annihilates ``matrix[p, q]``, or None when it is already zero."""
    pivot = matrix[p, q]
    magnitude = abs(pivot)
    if magnitude == 0.0:
        return None
    phase = np.conj(pivot / magnitude)
    delta = matrix[q, q].real - matrix[p, p].real
    # |theta| <= pi/4 keeps the cyclic sweep convergent.
    if delta >= 0.0:
        theta = 0.5 * np.arctan2(2.0 * magnitude, delta)
    else:
        theta = 0.5 * np.arctan2(-2.0 * magnitude, -delta)
    cosine, sine = np.cos(theta), np.sin(theta)
    rotation = np.eye(matrix.shape[0], dtype=np.complex128)
    rotation[p, p] = cosine
    rotation[p, q] = sine
    rotation[q, p] = -sine * phase
    rotation[q, q] = cosine * phase
    return rotation


def hermitian_eigh(matrix):
    """Diagonalize a 2x2 or 4x4 Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back ascending. Inside a degenerate cluster the basis is
    some orthonormal basis of the cluster subspace; callers must not rely on
    its gauge.
    """
    work = as_hermitian(matrix).copy()
    size = work.shape[0]
    vectors = np.eye(size, dtype=np.complex128)
    threshold = OFF_DIAGONAL_TOLERANCE * float(np.linalg.norm(work))

    sweeps = 0
    while _off_diagonal_norm(work) > threshold:
        if sweeps == MAX_SWEEPS:
            msg = "Jacobi iteration did not converge"
            raise EigenSolverError(
                msg, sweeps=sweeps, off_diagonal=_off_diagonal_norm(work)
            )
        for p in range(size - 1):
            for q in range(p + 1, size):
                rotation = _jacobi_rotation(work, p, q)
                if rotation is None:
                    continue
                work = rotation.conj().T @ work @ rotation
                vectors = vectors @ rotation
        sweeps += 1

    eigenvalues = work.diagonal().real.copy()
    order = np.argsort(eigenvalues, kind="stable")
    return EigenSystem(eigenvalues[order], vectors[:, order])


def unitary_exp(matrix, dt):
    """Return exp(-i H dt) built from the eigendecomposition of H."""
    eigenvalues, vectors = hermitian_eigh(matrix)
    phases = np.exp(-1j * eigenvalues * dt)
    return (vectors * phases) @ vectors.conj().T


def inner(bra, ket):
    """<bra|ket> with the first argument conjugated."""
    return complex(np.vdot(bra, ket))


def projector(columns):
    """Orthogonal projector onto the span of orthonormal ``columns``."""
    columns = np.asarray(columns, dtype=np.complex128)
    return columns @ columns.conj().T


def orthonormalize(columns):
    """Modified Gram-Schmidt over the columns, with one re-orthogonalization pass."""
    basis = np.array(columns, dtype=np.complex128, copy=True)
    if basis.ndim != 2:
        msg = "Expected a two dimensional array of column vectors"
        raise DimensionError(msg, shape=basis.shape)
    for j in range(basis.shape[1]):
        for _ in range(2):
            for i in range(j):
                basis[:, j] -= np.vdot(basis[:, i], basis[:, j]) * basis[:, i]
        norm = float(np.linalg.norm(basis[:, j]))
        if norm < PIVOT_FLOOR:
            msg = "Columns are linearly dependent"
            raise DegenerateInputError(msg, column=j, pivot_norm=norm)
        basis[:, j] /= norm
    return basis
