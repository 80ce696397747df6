import numpy as np
import pytest

from spinpair import _accel
from spinpair.kernels import jacobi_eigh

from conftest import random_hermitian


@pytest.mark.parametrize("n", [1, 2, 3, 4, 8, 17])
def test_jacobi_matches_lapack(rng, use_numba, n):
    a = random_hermitian(rng, n)
    values, vectors = jacobi_eigh(a, use_numba=use_numba)
    np.testing.assert_allclose(np.sort(values), np.linalg.eigvalsh(a), atol=1e-12)
    np.testing.assert_allclose(a @ vectors, vectors * values, atol=1e-12)
    np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(n), atol=1e-12)


def test_input_not_modified(rng, use_numba):
    a = random_hermitian(rng, 5)
    before = a.copy()
    jacobi_eigh(a, use_numba=use_numba)
    np.testing.assert_array_equal(a, before)


@pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")
def test_backends_agree(rng):
    a = random_hermitian(rng, 12)
    v1, _ = jacobi_eigh(a, use_numba=True)
    v2, _ = jacobi_eigh(a, use_numba=False)
    np.testing.assert_allclose(np.sort(v1), np.sort(v2), atol=1e-12)


def test_already_diagonal_takes_no_rotation(use_numba):
    a = np.diag([3.0, -1.0, 2.0, 0.0]).astype(complex)
    values, vectors = jacobi_eigh(a, use_numba=use_numba)
    np.testing.assert_array_equal(values, [3.0, -1.0, 2.0, 0.0])
    np.testing.assert_array_equal(vectors, np.eye(4))


def test_degenerate_spectrum(use_numba):
    # triplet/singlet with a threefold degenerate level
    a = np.array([[1, 0, 0, 0], [0, -1, 2, 0], [0, 2, -1, 0], [0, 0, 0, 1]], dtype=complex)
    values, vectors = jacobi_eigh(a, use_numba=use_numba)
    np.testing.assert_allclose(np.sort(values), [-3, 1, 1, 1], atol=1e-14)
    np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(4), atol=1e-14)
