"""Cyclic Jacobi eigensolver for dense complex Hermitian matrices.

Two interchangeable kernels share one algorithm: ``jacobi_loops`` is written
as scalar loops and gets compiled by numba, ``jacobi_numpy`` applies each
plane rotation with vectorised row/column slices.  ``jacobi_eigh`` picks one
according to :mod:`spinpair._accel`.
"""
import math

import numpy as np

from ._accel import USE_NUMBA, njit

EPS = 2.220446049250313e-16
MAX_SWEEPS = 60


def _rotation(app, aqq, apq):
    """Return (c, s, phase) zeroing ``apq`` in the 2x2 block [[app, apq], [apq*, aqq]]."""
    mag = abs(apq)
    theta = (aqq - app) / (2.0 * mag)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c, apq / mag


_rotation_jit = njit(_rotation)


def _jacobi_loops(a, max_sweeps):
    # a is overwritten; returns (diag, vectors, sweeps)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j].real ** 2 + a[i, j].imag ** 2
    fro = math.sqrt(fro)
    tiny = 1e-300 + EPS * EPS * fro
    sweeps = 0
    for sweeps in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q].real ** 2 + a[p, q].imag ** 2
        if math.sqrt(off) <= EPS * fro or off == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tiny:
                    continue
                c, s, ph = _rotation_jit(a[p, p].real, a[q, q].real, apq)
                cph = ph.conjugate()
                # A <- A U with U = [[c, s], [-s cph, c cph]] on (p, q)
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * cph * akq
                    a[k, q] = s * akp + c * cph * akq
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * cph * vkq
                    v[k, q] = s * vkp + c * cph * vkq
                # A <- U^H A
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * ph * aqk
                    a[q, k] = s * apk + c * ph * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    diag = np.empty(n)
    for i in range(n):
        diag[i] = a[i, i].real
    return diag, v, sweeps


jacobi_loops = njit(_jacobi_loops)


def jacobi_numpy(a, max_sweeps=MAX_SWEEPS):
    """Pure-numpy twin of :func:`jacobi_loops` (same rotation sequence)."""
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    fro = float(np.linalg.norm(a))
    tiny = 1e-300 + EPS * EPS * fro
    iu = np.triu_indices(n, 1)
    sweeps = 0
    for sweeps in range(max_sweeps):
        off = float(np.sum(np.abs(a[iu]) ** 2))
        if math.sqrt(off) <= EPS * fro or off == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tiny:
                    continue
                c, s, ph = _rotation(a[p, p].real, a[q, q].real, apq)
                cph = ph.conjugate()
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * cph * colq
                a[:, q] = s * colp + c * cph * colq
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * cph * vq
                v[:, q] = s * vp + c * cph * vq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * ph * rowq
                a[q, :] = s * rowp + c * ph * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    return a.diagonal().real.copy(), v, sweeps


def jacobi_eigh(a, use_numba=None):
    """Diagonalise a Hermitian matrix; returns unsorted ``(values, vectors)``.

    ``a`` is not modified.  ``use_numba=None`` follows the module default.
    """
    work = np.array(a, dtype=np.complex128, order="C", copy=True)
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba:
        values, vectors, _ = jacobi_loops(work, MAX_SWEEPS)
    else:
        values, vectors, _ = jacobi_numpy(work, MAX_SWEEPS)
    return values, vectors
