"""N-site Heisenberg chain with site-dependent fields, for probing how far the
pair results carry over to longer chains.

The chain is compared against the pair model evaluated at the mean field and
an effective inhomogeneity ``sqrt(1 + <b^2>/J^2)`` built from the field
variance.  The comparison is reported, never asserted.
"""
from dataclasses import dataclass
import math

import numpy as np

from .entanglement import concurrence_general
from .errors import ParameterRangeError
from .model import PairParams
from .qmat import SIGMA_X, SIGMA_Y, SIGMA_Z, hermitian_eigen, matrix_function, partial_trace, site_operator
from .thermal import concurrence_array

MAX_SITES = 8


@dataclass(frozen=True)
class ChainParams:
    n_sites: int
    J: float
    fields: tuple
    boundary: str = "open"

    def __post_init__(self):
        fields = tuple(float(f) for f in self.fields)
        object.__setattr__(self, "fields", fields)
        if not 2 <= self.n_sites <= MAX_SITES:
            raise ParameterRangeError(f"n_sites must be in [2, {MAX_SITES}], got {self.n_sites}")
        if len(fields) != self.n_sites:
            raise ParameterRangeError(f"{len(fields)} fields given for {self.n_sites} sites")
        if self.J == 0:
            raise ParameterRangeError("coupling J must be nonzero")
        if self.boundary not in ("open", "periodic"):
            raise ParameterRangeError(f"boundary must be 'open' or 'periodic', got {self.boundary!r}")

    def bonds(self):
        pairs = [(i, i + 1) for i in range(self.n_sites - 1)]
        # a 2-site ring has only the one bond
        if self.boundary == "periodic" and self.n_sites > 2:
            pairs.append((self.n_sites - 1, 0))
        return pairs

    @property
    def mean_field(self):
        return sum(self.fields) / self.n_sites

    @property
    def field_variance(self):
        m = self.mean_field
        return sum((f - m) ** 2 for f in self.fields) / self.n_sites

    @property
    def effective_xi(self):
        return math.sqrt(1.0 + self.field_variance / self.J ** 2)


@dataclass(frozen=True)
class ChainReport:
    pair: tuple
    T: float
    concurrence: float
    effective_xi: float
    pair_model_concurrence: float

    @property
    def gap(self):
        return abs(self.concurrence - self.pair_model_concurrence)


def build_chain_hamiltonian(cp):
    n = cp.n_sites
    ops = {name: [site_operator(s, k, n) for k in range(n)]
           for name, s in (("x", SIGMA_X), ("y", SIGMA_Y), ("z", SIGMA_Z))}
    H = np.zeros((2 ** n, 2 ** n), dtype=np.complex128)
    for i, j in cp.bonds():
        for name in "xyz":
            H += cp.J * (ops[name][i] @ ops[name][j])
    for k, field in enumerate(cp.fields):
        H += field * ops["z"][k]
    return H


def chain_gibbs_state(cp, T):
    if not T > 0:
        raise ParameterRangeError(f"temperature must be positive, got {T!r}")
    H = build_chain_hamiltonian(cp)
    eig = hermitian_eigen(H)
    e0 = eig.values[0]
    weights = matrix_function(H, lambda x: np.exp(-(x - e0) / T), eig=eig)
    return weights / np.trace(weights).real


def chain_pair_concurrence(cp, pair, T, rho=None):
    """Thermal concurrence of sites ``pair`` next to the pair-model prediction.

    ``rho`` may carry a precomputed :func:`chain_gibbs_state` for the same T.
    """
    i, j = (int(s) for s in pair)
    if not 0 <= i < j < cp.n_sites:
        raise ParameterRangeError(f"pair must satisfy 0 <= i < j < {cp.n_sites}, got {pair}")
    if rho is None:
        rho = chain_gibbs_state(cp, T)
    reduced = partial_trace(rho, (i, j), cp.n_sites)
    reduced = 0.5 * (reduced + reduced.conj().T)
    xi = cp.effective_xi
    predicted = float(concurrence_array(cp.J, cp.mean_field, xi, T))
    return ChainReport((i, j), float(T), concurrence_general(reduced), xi, predicted)


def pair_params_for_two_sites(cp):
    """The pair model matching a two-site chain."""
    f1, f2 = cp.fields
    return PairParams(cp.J, 0.5 * (f1 + f2), 0.5 * (f1 - f2))
