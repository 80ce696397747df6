"""Thermal (Gibbs) state of the pair: closed-form concurrence, numerical oracle, thresholds.

Temperatures are in units with k = 1.  Closed-form quantities are evaluated
with the largest Boltzmann exponent factored out, so nothing overflows even
though the raw partition function grows like exp(beta * |E_ground|).
"""
from dataclasses import dataclass
import math

import numpy as np

from .entanglement import XState, concurrence_general
from .errors import OverflowGuardError, ParameterRangeError, SolverError
from .model import PairParams, build_hamiltonian, closed_form_energies
from .qmat import hermitian_eigen, matrix_function

EXPONENT_LIMIT = 700.0
BETA_MIN = 1e-9
BETA_MAX = 1e3
BISECT_TOL = 1e-14
SCAN_POINTS = 1000


@dataclass(frozen=True)
class ThermalPoint:
    params: PairParams
    T: float

    def __post_init__(self):
        T = float(self.T)
        if not (T > 0.0 and math.isfinite(T)):
            raise ParameterRangeError(f"temperature must be positive and finite, got {self.T!r}")
        object.__setattr__(self, "T", T)
        check_overflow_guard(self.params.J, self.params.B, self.params.xi, 1.0 / T)

    @property
    def beta(self):
        return 1.0 / self.T


@dataclass(frozen=True)
class ThresholdResult:
    T_c: float | None
    bracket: tuple
    residual: float


def check_overflow_guard(J, B, xi, beta):
    J, B, xi, beta = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (J, B, xi, beta)))
    aJ, aB = np.abs(J), np.abs(B)
    emax = np.maximum(np.maximum(np.abs(J + 2 * aB), np.abs(J - 2 * aB)),
                      np.abs(J) + 2 * aJ * xi)
    worst = beta * emax
    if np.any(worst > EXPONENT_LIMIT):
        i = int(np.argmax(worst))
        T = 1.0 / beta.flat[i]
        raise OverflowGuardError(
            f"beta*max|E| = {worst.flat[i]:.4g} exceeds {EXPONENT_LIMIT:g} at T = {T:.4g}; "
            f"use T >= {emax.flat[i] / EXPONENT_LIMIT:.4g}")


def _scaled_terms(J, B, xi, beta):
    """Pieces of the Gibbs state, all divided by exp(m) with m the largest exponent.

    Returns (Zs, m, u_plus*Zs, u_minus*Zs, central*Zs, S) where Z = Zs*exp(m),
    central is each central population for a uniform field and
    S = exp(beta J) sinh(2 beta J xi) / exp(m).
    """
    aB = np.abs(B)
    x = 2.0 * beta * np.abs(J) * xi
    a1 = -beta * J + 2.0 * beta * aB
    a2 = beta * J + x
    m = np.maximum(a1, a2)
    e1 = np.exp(a1 - m)
    e2 = np.exp(a2 - m)
    flip = np.exp(-4.0 * beta * aB)
    damp = np.exp(-2.0 * x)
    Zs = e1 * (1.0 + flip) + e2 * (1.0 + damp)
    S = np.sign(J) * e2 * (-np.expm1(-2.0 * x)) * 0.5
    return Zs, m, e1 * flip, e1, e2 * (1.0 + damp) * 0.5, S


def partition_function(pt):
    p = pt.params
    Zs, m, *_ = _scaled_terms(p.J, p.B, p.xi, pt.beta)
    return float(Zs * math.exp(m))


def gibbs_xstate(pt):
    """Closed-form Gibbs state as an :class:`XState`."""
    p = pt.params
    Zs, _, up, um, _, S = _scaled_terms(p.J, p.B, p.xi, pt.beta)
    u_plus = float(up / Zs)
    u_minus = float(um / Zs)
    z = float(-S / (p.xi * Zs))
    w = 0.5 * (1.0 - u_plus - u_minus)
    return XState(u_plus, u_minus, w, z, p.delta * z)


def concurrence_array(J, B, xi, T):
    """Vectorised closed-form thermal concurrence (broadcasts its arguments).

    C = (2/Z) max(0, exp(beta J) |sinh(2 beta J xi)| / xi - exp(-beta J))
    """
    J, B, xi, T = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (J, B, xi, T)))
    if np.any(T <= 0):
        raise ParameterRangeError("temperature must be positive")
    if np.any(xi < 1):
        raise ParameterRangeError("xi must be >= 1")
    beta = 1.0 / T
    check_overflow_guard(J, B, xi, beta)
    Zs, m, *_, S = _scaled_terms(J, B, xi, beta)
    numerator = np.abs(S) / xi - np.exp(-beta * J - m)
    return 2.0 * np.maximum(numerator, 0.0) / Zs


def concurrence_closed_form(pt):
    p = pt.params
    return float(concurrence_array(p.J, p.B, p.xi, pt.T))


def is_entangled(pt):
    """True when the thermal concurrence is positive.

    The sign of the concurrence is decided by a B-free expression, so the
    answer is the same for every field B at fixed (J, xi, T).
    """
    p, beta = pt.params, pt.beta
    x = 2.0 * beta * abs(p.J) * p.xi
    # exp(beta J)|sinh x| / xi > exp(-beta J), in logs
    lhs = 2.0 * beta * p.J + x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0 * p.xi) if x > 0 else -math.inf
    return lhs > 0.0


def gibbs_matrix(params, T):
    """Gibbs state exp(-H/T)/Z by spectral calculus on the numerical eigensystem.

    Returns ``(rho, Z)``.
    """
    beta = 1.0 / T
    H = build_hamiltonian(params)
    eig = hermitian_eigen(H)
    e0 = eig.values[0]
    weights = matrix_function(H, lambda x: np.exp(-beta * (x - e0)), eig=eig)
    tr = np.trace(weights).real
    return weights / tr, tr * math.exp(-beta * e0)


def concurrence_oracle(pt):
    """Concurrence via numerical diagonalisation and the general Wootters formula."""
    rho, _ = gibbs_matrix(pt.params, pt.T)
    return concurrence_general(rho)


def _threshold_log_ratio(sign, xi, beta):
    """log(exp(2 beta sign) sinh(2 beta xi) / xi); positive above the threshold beta."""
    beta = np.asarray(beta, dtype=float)
    x = 2.0 * beta * xi
    return 2.0 * beta * sign + x + np.log1p(-np.exp(-2.0 * x)) - math.log(2.0 * xi)


def threshold_function(sign, xi, beta):
    """exp(2 beta sign) sinh(2 beta xi) - xi; may be +inf far above the root."""
    with np.errstate(over="ignore"):
        grow = np.exp(2.0 * beta * (sign + xi))
        decay = np.exp(2.0 * beta * (sign - xi))
    return float(0.5 * (grow - decay) - xi)


def threshold_temperature(J_sign, xi):
    """Temperature above which the thermal concurrence vanishes.

    Root in beta of exp(2 beta J_sign) sinh(2 beta xi) = xi, found by doubling
    the upper bracket from beta = 1 and then bisecting.  ``T_c`` is ``None``
    when no sign change exists in [1e-9, 1e3].
    """
    sign = 1.0 if J_sign > 0 else -1.0
    xi = float(xi)
    if not xi >= 1.0:
        raise ParameterRangeError(f"xi must be >= 1, got {xi!r}")
    grid = np.geomspace(BETA_MIN, BETA_MAX, SCAN_POINTS)
    positive = _threshold_log_ratio(sign, xi, grid) > 0
    changes = int(np.count_nonzero(positive[1:] != positive[:-1]))
    if changes > 1:
        raise SolverError(f"threshold equation has {changes} sign changes for xi = {xi}")

    lo, hi = BETA_MIN, 1.0
    if _threshold_log_ratio(sign, xi, lo) > 0:
        raise SolverError("threshold function positive at the lower bracket")
    while _threshold_log_ratio(sign, xi, hi) <= 0:
        if hi >= BETA_MAX:
            return ThresholdResult(None, (lo, hi), float(threshold_function(sign, xi, hi)))
        lo, hi = hi, min(2.0 * hi, BETA_MAX)
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _threshold_log_ratio(sign, xi, mid) > 0:
            hi = mid
        else:
            lo = mid
    beta = hi if abs(threshold_function(sign, xi, hi)) < abs(threshold_function(sign, xi, lo)) else lo
    return ThresholdResult(1.0 / beta, (lo, hi), threshold_function(sign, xi, beta))
