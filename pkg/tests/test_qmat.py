import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from spinpair.errors import DimensionError, FunctionDomainError, NotHermitianError
from spinpair.model import PairParams, build_hamiltonian
from spinpair.qmat import (
    IDENTITY2, SIGMA_Y, SIGMA_Z, hermitian_eigen, kron, matrix_function,
    partial_trace, site_operator,
)

from conftest import random_density, random_hermitian


def test_identity_eigen(use_numba):
    eig = hermitian_eigen(np.eye(4), use_numba=use_numba)
    np.testing.assert_array_equal(eig.values, [1, 1, 1, 1])
    np.testing.assert_array_equal(eig.vectors, np.eye(4))


def test_diagonal_eigen_is_permutation(use_numba):
    eig = hermitian_eigen(np.diag([3.0, -1.0, 2.0, 0.0]), use_numba=use_numba)
    np.testing.assert_array_equal(eig.values, [-1, 0, 2, 3])
    expected = np.zeros((4, 4))
    expected[[1, 3, 2, 0], [0, 1, 2, 3]] = 1
    np.testing.assert_array_equal(eig.vectors, expected)


def test_pair_hamiltonian_spectrum_against_characteristic_polynomial(use_numba):
    # exact charpoly of H(J=1, B=1, b=3/4) in rationals
    J, B, b = sympy.Integer(1), sympy.Integer(1), sympy.Rational(3, 4)
    sx = sympy.Matrix([[0, 1], [1, 0]])
    sy = sympy.Matrix([[0, -sympy.I], [sympy.I, 0]])
    sz = sympy.Matrix([[1, 0], [0, -1]])
    i2 = sympy.eye(2)
    kp = sympy.kronecker_product
    H = J * (kp(sx, sx) + kp(sy, sy) + kp(sz, sz)) + (B + b) * kp(sz, i2) + (B - b) * kp(i2, sz)
    roots = sorted(sympy.roots(H.charpoly().as_expr()).keys())
    assert roots == [sympy.Rational(-7, 2), -1, sympy.Rational(3, 2), 3]

    eig = hermitian_eigen(build_hamiltonian(PairParams(1, 1, 0.75)), use_numba=use_numba)
    np.testing.assert_allclose(eig.values, [float(r) for r in roots], atol=1e-12)


def test_eigen_invariants(rng, use_numba):
    for n in (1, 2, 4, 8):
        a = random_hermitian(rng, n)
        eig = hermitian_eigen(a, use_numba=use_numba)
        assert np.all(np.diff(eig.values) >= 0)
        for k, lam in enumerate(eig.values):
            resid = np.max(np.abs(a @ eig.vectors[:, k] - lam * eig.vectors[:, k]))
            assert resid <= 1e-10 * max(1.0, abs(lam))
        assert np.max(np.abs(eig.vectors.conj().T @ eig.vectors - np.eye(n))) <= 1e-10
        assert np.max(np.abs(eig.reconstruct() - a)) <= 1e-10


def test_eigenvector_phase_convention(rng):
    eig = hermitian_eigen(random_hermitian(rng, 6))
    for col in eig.vectors.T:
        j = np.argmax(np.abs(col))
        assert col[j].imag == 0.0 and col[j].real > 0


def test_eigen_is_deterministic(rng):
    a = random_hermitian(rng, 7)
    e1, e2 = hermitian_eigen(a), hermitian_eigen(a.copy())
    np.testing.assert_array_equal(e1.values, e2.values)
    np.testing.assert_array_equal(e1.vectors, e2.vectors)


def test_non_hermitian_rejected():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(NotHermitianError, match="2.000e\\+00") as info:
        hermitian_eigen(a)
    assert info.value.asymmetry == 2.0


def test_tiny_asymmetry_tolerated():
    a = np.array([[1.0, 1.0 + 5e-13], [1.0, 1.0]])
    hermitian_eigen(a)


@pytest.mark.parametrize("shape", [(0, 0), (2, 3), (4,)])
def test_bad_dimension(shape):
    with pytest.raises(DimensionError):
        hermitian_eigen(np.zeros(shape))


def test_matrix_function_examples():
    np.testing.assert_allclose(matrix_function(np.eye(2), np.exp), math.e * np.eye(2), atol=1e-14)
    np.testing.assert_allclose(matrix_function(np.diag([4.0, 9.0]), np.sqrt), np.diag([2.0, 3.0]), atol=1e-14)


def test_matrix_exponential_against_taylor_series():
    H = build_hamiltonian(PairParams(-1, 0, 0))
    term = np.eye(4, dtype=complex)
    total = term.copy()
    for k in range(1, 50):
        term = term @ (-H) / k
        total += term
    np.testing.assert_allclose(matrix_function(H, lambda x: np.exp(-x)), total, atol=1e-10)


def test_matrix_function_identity_reproduces(rng):
    a = random_hermitian(rng, 5)
    np.testing.assert_allclose(matrix_function(a, lambda x: x), a, atol=1e-10)


def test_trace_of_exponential(rng):
    a = random_hermitian(rng, 6)
    eig = hermitian_eigen(a)
    assert abs(np.trace(matrix_function(a, np.exp)) - np.exp(eig.values).sum()) <= 1e-10


def test_sqrt_domain():
    with pytest.raises(FunctionDomainError):
        matrix_function(np.diag([1.0, -1e-6]), np.sqrt)
    root = matrix_function(np.diag([1.0, -5e-13]), np.sqrt)
    np.testing.assert_array_equal(root, np.diag([1.0, 0.0]))


def test_function_undefined_on_eigenvalue():
    with pytest.raises(FunctionDomainError):
        matrix_function(np.diag([1.0, 0.0]), np.log)


def test_kron_examples():
    np.testing.assert_array_equal(kron(IDENTITY2, IDENTITY2), np.eye(4))
    yy = kron(SIGMA_Y, SIGMA_Y)
    expected = np.zeros((4, 4))
    expected[0, 3], expected[1, 2], expected[2, 1], expected[3, 0] = -1, 1, 1, -1
    np.testing.assert_array_equal(yy, expected)
    np.testing.assert_array_equal(kron(SIGMA_Z, IDENTITY2), np.diag([1, 1, -1, -1]))


def test_kron_associative(rng):
    a, b, c = (random_hermitian(rng, 2) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
    np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-12)


def test_partial_trace_examples():
    mixed = np.eye(8) / 8
    np.testing.assert_allclose(partial_trace(mixed, (0, 1), 3), np.eye(4) / 4, atol=1e-15)

    up, down = np.array([1, 0]), np.array([0, 1])
    pm = np.kron(up, down)
    product = np.kron(np.outer(pm, pm), np.outer(up, up))
    np.testing.assert_array_equal(partial_trace(product, (0, 1), 3), np.outer(pm, pm))


def test_partial_trace_of_chain_gibbs_state():
    from spinpair.chain import ChainParams, chain_gibbs_state

    rho = chain_gibbs_state(ChainParams(3, 1.0, (0.3, -0.2, 0.5)), 0.7)
    red = partial_trace(rho, (0, 2), 3)
    assert abs(np.trace(red) - 1) <= 1e-12
    assert np.max(np.abs(red - red.conj().T)) <= 1e-12


def test_partial_trace_key_order_irrelevant(rng):
    rho = random_density(rng, 8)
    np.testing.assert_array_equal(partial_trace(rho, (2, 0), 3), partial_trace(rho, (0, 2), 3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([3, 4, 5]), st.booleans())
def test_partial_trace_of_product(seed, n, kept_on_left):
    rng = np.random.default_rng(seed)
    a = random_density(rng, 4)
    b = random_hermitian(rng, 2 ** (n - 2))
    if kept_on_left:
        op, keep = np.kron(a, b), (0, 1)
    else:
        op, keep = np.kron(b, a), (n - 2, n - 1)
    np.testing.assert_allclose(partial_trace(op, keep, n), np.trace(b) * a, atol=1e-12)


def test_partial_trace_dimension_errors(rng):
    with pytest.raises(DimensionError):
        partial_trace(np.eye(8) / 8, (0, 1), 4)
    with pytest.raises(DimensionError):
        partial_trace(np.eye(8) / 8, (1, 1), 3)
    with pytest.raises(DimensionError):
        partial_trace(np.eye(8) / 8, (0, 3), 3)


def test_site_operator():
    np.testing.assert_array_equal(site_operator(SIGMA_Z, 0, 2), kron(SIGMA_Z, IDENTITY2))
    np.testing.assert_array_equal(site_operator(SIGMA_Z, 1, 2), kron(IDENTITY2, SIGMA_Z))
