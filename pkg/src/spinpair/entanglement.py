"""Two-qubit entanglement measures: Wootters concurrence and entanglement of formation."""
from dataclasses import dataclass
import math

import numpy as np

from .errors import InvalidStateError, ParameterRangeError
from .qmat import SIGMA_Y, check_hermitian, hermitian_eigen, matrix_function

TRACE_TOL = 1e-10
PSD_TOL = 1e-10
XSTATE_TOL = 1e-12

SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class XState:
    """Density matrix with nonzero entries only at the diagonal and the central block.

    ::

        [[u_plus,        0,        0,       0],
         [0,      w + w_skew,      z,       0],
         [0,             z, w - w_skew,     0],
         [0,             0,        0, u_minus]]

    ``w`` is the mean of the two central populations.  They coincide only for
    a uniform field; the thermal state of the pair has ``w_skew = delta * z``.
    """

    u_plus: float
    u_minus: float
    w: float
    z: float
    w_skew: float = 0.0

    def validate(self):
        u, v, w, z, s = self.u_plus, self.u_minus, self.w, self.z, self.w_skew
        total = u + v + 2 * w
        if abs(total - 1.0) > XSTATE_TOL:
            raise InvalidStateError(f"populations sum to {total!r}, expected 1")
        lowest = min(u, v, w + s, w - s)
        if lowest < -1e-14:
            raise InvalidStateError(f"negative population {lowest!r}")
        if abs(z) > w + XSTATE_TOL or z * z > (w + s) * (w - s) + XSTATE_TOL:
            raise InvalidStateError(f"coherence |z| = {abs(z)!r} exceeds central populations")
        return self

    def to_matrix(self):
        rho = np.zeros((4, 4), dtype=np.complex128)
        rho[0, 0] = self.u_plus
        rho[1, 1] = self.w + self.w_skew
        rho[2, 2] = self.w - self.w_skew
        rho[1, 2] = rho[2, 1] = self.z
        rho[3, 3] = self.u_minus
        return rho


def check_density_matrix(rho):
    m = check_hermitian(rho)
    if m.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 two-qubit state, got {m.shape}")
    tr = np.trace(m).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"trace is {tr!r}, expected 1")
    return m


def spin_flip(rho):
    """rho_tilde = (sy x sy) rho* (sy x sy)."""
    return SPIN_FLIP @ np.asarray(rho, dtype=np.complex128).conj() @ SPIN_FLIP


def wootters_lambdas(rho):
    """Decreasing square roots of the eigenvalues of rho * rho_tilde.

    With M = sqrt(rho) (sy x sy) sqrt(rho)*, one has M M^H = sqrt(rho) rho_tilde
    sqrt(rho), so the lambdas are the singular values of M.  They are read off
    as the top half of the spectrum of the Hermitian dilation [[0, M], [M^H, 0]],
    which keeps small lambdas accurate to rounding level instead of to the
    square root of it.
    """
    m = check_density_matrix(rho)
    eig = hermitian_eigen(m)
    if eig.values[0] < -PSD_TOL:
        raise InvalidStateError(f"state has negative eigenvalue {eig.values[0]!r}")
    root = matrix_function(m, np.sqrt, eig=eig)
    M = root @ SPIN_FLIP @ root.conj()
    dilation = np.zeros((8, 8), dtype=np.complex128)
    dilation[:4, 4:] = M
    dilation[4:, :4] = M.conj().T
    lam = hermitian_eigen(dilation).values[:3:-1]
    if lam[-1] < -PSD_TOL:
        raise InvalidStateError(f"negative Wootters eigenvalue {lam[-1]!r}")
    return np.clip(lam, 0.0, None)


def concurrence_general(rho):
    lam = wootters_lambdas(rho)
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_xstate(x):
    x.validate()
    return 2.0 * max(0.0, abs(x.z) - math.sqrt(x.u_plus * x.u_minus))


def pure_concurrence(amplitudes):
    """2|ad - bc| for a|++> + b|+-> + c|-+> + d|-->."""
    a, b, c, d = np.asarray(amplitudes, dtype=np.complex128).reshape(4)
    norm = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2
    if abs(norm - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"state vector has squared norm {norm!r}")
    return float(2.0 * abs(a * d - b * c))


def entanglement_of_formation(c):
    """Binary entropy of (1 + sqrt(1 - C^2)) / 2, in ebits."""
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise ParameterRangeError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(float(c), 0.0), 1.0)
    if c == 0.0:
        return 0.0
    root = math.sqrt((1.0 - c) * (1.0 + c))
    small = 0.5 * c * c / (1.0 + root)  # (1 - root) / 2 without cancellation
    if small == 0.0:
        return 0.0
    large = 1.0 - small
    return -(small * math.log2(small) + large * math.log1p(-small) / math.log(2.0))
