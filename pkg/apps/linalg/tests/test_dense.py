"""Tests for the dense linear algebra of Linalg App."""

import numpy as np
from django.test import SimpleTestCase
from scipy.stats import unitary_group

from apps.linalg.dense import hermitian_eigh
from apps.linalg.dense import inner
from apps.linalg.dense import orthonormalize
from apps.linalg.dense import projector
from apps.linalg.dense import unitary_exp
from apps.linalg.exceptions import DegenerateInputError
from apps.linalg.exceptions import DimensionError
from apps.linalg.exceptions import NotHermitianError

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def random_hermitian(rng, size=4):
    raw = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    return 0.5 * (raw + raw.conj().T)


class HermitianEighTestCase(SimpleTestCase):
    """Test cases for hermitian_eigh."""

    def setUp(self):
        self.rng = np.random.default_rng(7)

    def test_identity(self):
        """Test the identity has unit eigenvalues."""
        eigenvalues, vectors = hermitian_eigh(np.eye(4))
        np.testing.assert_allclose(eigenvalues, np.ones(4))
        np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(4), atol=1e-12)

    def test_pauli_z(self):
        """Test sigma z gives (-1, +1) with e2, e1 up to phase."""
        eigenvalues, vectors = hermitian_eigh(SIGMA_Z)
        np.testing.assert_allclose(eigenvalues, [-1.0, 1.0])
        self.assertAlmostEqual(abs(vectors[1, 0]), 1.0, places=12)
        self.assertAlmostEqual(abs(vectors[0, 1]), 1.0, places=12)

    def test_random_residuals_and_orthonormality(self):
        """Test residuals and orthonormality for random Hermitian matrices."""
        for size in (2, 4):
            for _ in range(50):
                matrix = random_hermitian(self.rng, size)
                system = hermitian_eigh(matrix)
                norm = np.linalg.norm(matrix)
                for value, vector in zip(
                    system.eigenvalues, system.eigenvectors.T, strict=True
                ):
                    residual = np.linalg.norm(matrix @ vector - value * vector)
                    self.assertLess(residual, 1e-10 * norm)
                gram = system.eigenvectors.conj().T @ system.eigenvectors
                np.testing.assert_allclose(gram, np.eye(size), atol=1e-10)
                self.assertTrue(np.all(np.diff(system.eigenvalues) >= 0))

    def test_reconstruction(self):
        """Test the spectral sum reproduces the matrix."""
        for _ in range(20):
            matrix = random_hermitian(self.rng)
            system = hermitian_eigh(matrix)
            scale = np.linalg.norm(matrix)
            np.testing.assert_allclose(
                system.reconstruct(), matrix, atol=1e-9 * scale
            )

    def test_degenerate_spectrum(self):
        """Test an exactly twofold degenerate matrix yields two clusters."""
        unitary = unitary_group.rvs(4, random_state=3)
        matrix = unitary @ np.diag([-1.5, -1.5, 1.5, 1.5]) @ unitary.conj().T
        matrix = 0.5 * (matrix + matrix.conj().T)
        system = hermitian_eigh(matrix)
        np.testing.assert_allclose(system.eigenvalues, [-1.5, -1.5, 1.5, 1.5])
        self.assertEqual(system.clusters(), [[0, 1], [2, 3]])

    def test_zero_matrix(self):
        """Test the zero matrix converges immediately."""
        eigenvalues, vectors = hermitian_eigh(np.zeros((4, 4)))
        np.testing.assert_allclose(eigenvalues, np.zeros(4))
        np.testing.assert_allclose(vectors, np.eye(4))

    def test_non_hermitian_rejected(self):
        """Test a non-Hermitian input names its asymmetry."""
        matrix = np.array([[0, 1], [0, 0]], dtype=complex)
        with self.assertRaises(NotHermitianError) as context:
            hermitian_eigh(matrix)
        self.assertAlmostEqual(context.exception.payload["max_asymmetry"], 1.0)

    def test_asymmetry_bound_is_absolute(self):
        """Test large entries do not loosen the 1e-12 asymmetry bound."""
        matrix = 1e4 * SIGMA_Z
        matrix[0, 1] = 5e-11
        with self.assertRaises(NotHermitianError):
            hermitian_eigh(matrix)
        matrix[0, 1] = 5e-13
        eigenvalues, _ = hermitian_eigh(matrix)
        np.testing.assert_allclose(eigenvalues, [-1e4, 1e4])

    def test_unsupported_dimension(self):
        """Test only 2x2 and 4x4 inputs are accepted."""
        with self.assertRaises(DimensionError):
            hermitian_eigh(np.eye(3))


class UnitaryExpTestCase(SimpleTestCase):
    """Test cases for unitary_exp."""

    def test_zero_generator(self):
        """Test a zero Hamiltonian propagates to the identity."""
        np.testing.assert_allclose(unitary_exp(np.zeros((4, 4)), 3.7), np.eye(4))

    def test_pauli_x_half_turn(self):
        """Test exp(-i pi sigma_x) is minus the identity."""
        np.testing.assert_allclose(
            unitary_exp(SIGMA_X, np.pi), -np.eye(2), atol=1e-12
        )

    def test_unitarity_and_composition(self):
        """Test unitarity, unit-modulus spectrum and time composition."""
        rng = np.random.default_rng(11)
        matrix = random_hermitian(rng)
        unitary = unitary_exp(matrix, 0.1)
        np.testing.assert_allclose(
            unitary.conj().T @ unitary, np.eye(4), atol=1e-12
        )
        np.testing.assert_allclose(
            np.abs(np.linalg.eigvals(unitary)), np.ones(4), atol=1e-12
        )
        np.testing.assert_allclose(
            unitary_exp(matrix, 0.3 + 0.45),
            unitary_exp(matrix, 0.3) @ unitary_exp(matrix, 0.45),
            atol=1e-10,
        )


class OrthonormalizeTestCase(SimpleTestCase):
    """Test cases for orthonormalize."""

    def test_orthonormal_pair_unchanged(self):
        """Test an orthonormal pair is returned unchanged."""
        pair = np.eye(4, dtype=complex)[:, [1, 3]]
        np.testing.assert_allclose(orthonormalize(pair), pair, atol=1e-12)

    def test_textbook_case(self):
        """Test (e1, e1 + e2) becomes (e1, e2)."""
        columns = np.array([[1, 1], [0, 1], [0, 0], [0, 0]], dtype=complex)
        result = orthonormalize(columns)
        np.testing.assert_allclose(np.abs(result[:, 0]), [1, 0, 0, 0], atol=1e-12)
        np.testing.assert_allclose(np.abs(result[:, 1]), [0, 1, 0, 0], atol=1e-12)
        self.assertLess(abs(inner(result[:, 0], result[:, 1])), 1e-12)

    def test_mixed_pair_keeps_projector(self):
        """Test a U(2)-mixed eigenpair spans the same projector."""
        unitary = unitary_group.rvs(4, random_state=5)
        pair = unitary[:, :2]
        mixer = unitary_group.rvs(2, random_state=6)
        mixed = pair @ mixer + 1e-3 * pair[:, ::-1]
        np.testing.assert_allclose(
            projector(orthonormalize(mixed)), projector(pair), atol=1e-10
        )

    def test_rank_deficiency(self):
        """Test dependent columns raise a degenerate-input error."""
        columns = np.array([[1, 2], [1, 2], [0, 0], [0, 0]], dtype=complex)
        with self.assertRaises(DegenerateInputError):
            orthonormalize(columns)
