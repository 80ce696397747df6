"""Entanglement of two Heisenberg-coupled spins in an inhomogeneous magnetic field."""
from .chain import ChainParams, ChainReport, build_chain_hamiltonian, chain_pair_concurrence
from .entanglement import (
    XState,
    concurrence_general,
    concurrence_xstate,
    entanglement_of_formation,
    pure_concurrence,
)
from .errors import SpinPairError
from .model import PairParams, PairSpectrum, GroundPhase, build_hamiltonian, closed_form_spectrum, ground_phase
from .qmat import EigenDecomposition, hermitian_eigen, kron, matrix_function, partial_trace
from .thermal import (
    ThermalPoint,
    ThresholdResult,
    concurrence_closed_form,
    concurrence_oracle,
    gibbs_xstate,
    is_entangled,
    threshold_temperature,
)

__version__ = "0.1.0"
