"""Two-spin isotropic Heisenberg pair in an inhomogeneous field.

    H = J s1.s2 + (B + b) s1z + (B - b) s2z

with Pauli matrices s and the computational basis ordered
|++>, |+->, |-+>, |-->.  The field difference enters only through
``delta = b / J`` and ``xi = sqrt(1 + delta**2)``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import ParameterRangeError
from .qmat import SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY2, kron

DELTA_LIMIT = 1e-14
BOUNDARY_TOL = 1e-12

PRODUCT = "ProductPhase"
ENTANGLED = "EntangledPhase"
BOUNDARY = "Boundary"


@dataclass(frozen=True)
class PairParams:
    """Model parameters.  ``B`` is stored as ``|B|``; every observable is even in B."""

    J: float
    B: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        J, B, b = float(self.J), float(self.B), float(self.b)
        if J == 0.0 or not math.isfinite(J):
            raise ParameterRangeError(f"coupling J must be finite and nonzero, got {self.J!r}")
        if not (math.isfinite(B) and math.isfinite(b)):
            raise ParameterRangeError("fields B and b must be finite")
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "B", abs(B))
        object.__setattr__(self, "b", b)

    @classmethod
    def from_xi(cls, J, B, xi):
        """Build parameters from the inhomogeneity ``xi`` (b = |J| sqrt(xi^2 - 1) >= 0)."""
        xi = float(xi)
        if not xi >= 1.0:
            raise ParameterRangeError(f"xi must be >= 1, got {xi!r}")
        return cls(J, B, abs(J) * math.sqrt((xi - 1.0) * (xi + 1.0)))

    @property
    def delta(self):
        return self.b / self.J

    @property
    def xi(self):
        return math.hypot(1.0, self.delta)

    @property
    def ferromagnetic(self):
        return self.J < 0


@dataclass(frozen=True)
class PairSpectrum:
    """Closed-form eigenpairs; ``states[k]`` is the amplitude vector of energy ``energies[k]``."""

    energies: np.ndarray
    states: np.ndarray


@dataclass(frozen=True)
class GroundPhase:
    label: str
    energy: float
    concurrence: float
    state: int  # index into PairSpectrum (0..3); -1 on a boundary


def build_hamiltonian(p):
    """4x4 Hamiltonian matrix in the computational basis."""
    exchange = kron(SIGMA_X, SIGMA_X) + kron(SIGMA_Y, SIGMA_Y) + kron(SIGMA_Z, SIGMA_Z)
    return (p.J * exchange
            + (p.B + p.b) * kron(SIGMA_Z, IDENTITY2)
            + (p.B - p.b) * kron(IDENTITY2, SIGMA_Z))


def closed_form_energies(p):
    J, B, xi = p.J, p.B, p.xi
    return np.array([J + 2 * B, J - 2 * B, -J * (1 - 2 * xi), -J * (1 + 2 * xi)])


def _mixing_amplitudes(delta, xi):
    """Normalised (alpha, gamma) with phi3 = alpha|+-> + gamma|-+>, phi4 = gamma|+-> - alpha|-+>.

    Uses (delta - 1 + xi) = 2 delta / (xi + 1 - delta) and
    (delta + 1 - xi) = 2 delta / (xi + 1 + delta): the common factor 2 delta
    cancels on normalisation up to its sign, so there is no 0/0 and no
    cancellation in xi - 1.
    """
    sign = -1.0 if delta <= -DELTA_LIMIT else 1.0
    if abs(delta) < DELTA_LIMIT:
        return sign * math.sqrt(0.5), sign * math.sqrt(0.5)
    p = 1.0 / (xi + 1.0 - delta)
    q = 1.0 / (xi + 1.0 + delta)
    norm = math.hypot(p, q)
    return sign * p / norm, sign * q / norm


def closed_form_spectrum(p):
    alpha, gamma = _mixing_amplitudes(p.delta, p.xi)
    states = np.zeros((4, 4), dtype=np.complex128)
    states[0, 0] = 1.0
    states[1, 3] = 1.0
    states[2, 1], states[2, 2] = alpha, gamma
    states[3, 1], states[3, 2] = gamma, -alpha
    return PairSpectrum(closed_form_energies(p), states)


def boundary_xi(J, B):
    """Inhomogeneity at which the product and entangled ground states cross."""
    B = abs(B) / abs(J)
    return B + 1.0 if J < 0 else B - 1.0


def ground_phase(p):
    """Classify the zero-temperature state.

    Ferromagnet: the product state |--> competes with phi3; antiferromagnet:
    |--> competes with phi4.  Within ``BOUNDARY_TOL`` of the crossing the
    ground space is degenerate and the reported concurrence is that of the
    equal mixture over it (the T -> 0+ limit of the thermal state).
    """
    from .entanglement import concurrence_general, pure_concurrence

    spec = closed_form_spectrum(p)
    entangled = 2 if p.J < 0 else 3
    gap = p.xi - boundary_xi(p.J, p.B)
    if abs(gap) <= BOUNDARY_TOL:
        e = spec.energies
        emin = min(e[1], e[entangled])
        ground = np.flatnonzero(e - emin <= BOUNDARY_TOL * abs(p.J))
        vecs = spec.states[ground]
        rho = vecs.T @ vecs.conj() / len(ground)
        return GroundPhase(BOUNDARY, float(emin), concurrence_general(rho), -1)
    if gap < 0:
        return GroundPhase(PRODUCT, float(spec.energies[1]), 0.0, 1)
    return GroundPhase(ENTANGLED, float(spec.energies[entangled]),
                       pure_concurrence(spec.states[entangled]), entangled)
