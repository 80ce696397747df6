"""Dense complex linear algebra used by the numerical (oracle) path.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DimensionError, FunctionDomainError, NotHermitianError
from .kernels import jacobi_eigh

HERMITIAN_TOL = 1e-12
SQRT_CLAMP = 1e-12

IDENTITY2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending real eigenvalues and matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self):
        return (self.vectors * self.values) @ self.vectors.conj().T


def as_matrix(a):
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    return m


def hermitian_asymmetry(a):
    return float(np.max(np.abs(a - a.conj().T)))


def check_hermitian(a, tol=HERMITIAN_TOL):
    m = as_matrix(a)
    asym = hermitian_asymmetry(m)
    if asym > tol:
        raise NotHermitianError(asym)
    return m


def hermitian_eigen(a, use_numba=None):
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back ascending (stable with respect to the Jacobi
    diagonal order on ties).  Each eigenvector's largest-magnitude component
    is rotated to be real and positive, so output is deterministic.
    """
    m = check_hermitian(a)
    values, vectors = jacobi_eigh(m, use_numba=use_numba)
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        j = int(np.argmax(np.abs(col)))
        phase = col[j] / abs(col[j])
        vectors[:, k] = col / phase
        vectors[j, k] = abs(col[j])
    return EigenDecomposition(values, vectors)


def _is_sqrt(f):
    return f is np.sqrt or f is math.sqrt


def matrix_function(a, f, eig=None):
    """Return ``sum_k f(lam_k) |v_k><v_k|`` for Hermitian ``a``.

    ``f`` maps real eigenvalues to reals.  For ``f`` = ``np.sqrt`` (or
    ``math.sqrt``) eigenvalues in ``[-1e-12, 0)`` are clamped to zero; anything
    more negative raises :class:`FunctionDomainError`, as does any non-finite
    ``f`` value.  A precomputed decomposition can be passed as ``eig``.
    """
    if eig is None:
        eig = hermitian_eigen(a)
    lam = eig.values
    if _is_sqrt(f):
        bad = lam < -SQRT_CLAMP
        if np.any(bad):
            raise FunctionDomainError(
                f"square root of negative eigenvalue {lam[bad][0]:.3e}")
        lam = np.clip(lam, 0.0, None)
    with np.errstate(all="ignore"):
        try:
            fl = np.asarray(f(lam), dtype=float)
        except TypeError:
            fl = np.array([f(float(x)) for x in lam], dtype=float)
    if not np.all(np.isfinite(fl)):
        i = int(np.flatnonzero(~np.isfinite(fl))[0])
        raise FunctionDomainError(f"function undefined at eigenvalue {lam[i]!r}")
    v = eig.vectors
    return (v * fl) @ v.conj().T


def kron(a, b):
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def site_operator(op, site, num_sites):
    """Embed a single-qubit operator at ``site`` (site 0 is the leftmost factor)."""
    out = np.ones((1, 1), dtype=np.complex128)
    for k in range(num_sites):
        out = np.kron(out, op if k == site else IDENTITY2)
    return out


def partial_trace(rho, keep, num_sites):
    """Reduce a ``num_sites``-qubit density matrix onto the two sites in ``keep``.

    The lower site index becomes the left tensor factor of the 4x4 result.
    """
    m = as_matrix(rho)
    if m.shape[0] != 2 ** num_sites:
        raise DimensionError(
            f"matrix of dim {m.shape[0]} does not match {num_sites} qubits")
    i, j = sorted(int(s) for s in keep)
    if i == j or i < 0 or j >= num_sites:
        raise DimensionError(f"invalid site pair {tuple(keep)} for {num_sites} sites")
    t = m.reshape((2,) * (2 * num_sites))
    letters = "abcdefghijklmnopqrstuvwxyz"
    row = list(letters[:num_sites])
    col = list(letters[num_sites:2 * num_sites])
    for k in range(num_sites):
        if k not in (i, j):
            col[k] = row[k]
    spec = "".join(row + col) + "->" + row[i] + row[j] + col[i] + col[j]
    return np.einsum(spec, t).reshape(4, 4)
