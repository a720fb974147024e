"""Entanglement created by premeasurement, and its link to skew information.

Modules
-------
linalg          Jacobi eigensolver, spectral sqrt/exp, kron, partial transpose/trace
states          density matrices, Bloch vectors, observables, PVMs, random states
measures        Wigner-Yanase skew information, variance, purity, mixedness
premeasure      controlled-shift isometry, CNOT, Hamiltonian evolution
entangle        negativity
qubit_analytic  closed-form qubit expressions and grid scans
verify          randomised invariant suites
cli             ``sweep`` / ``demo`` / ``verify`` commands
"""

from . import entangle, linalg, measures, premeasure, qubit_analytic, states
from .entangle import negative_eigenvalue_sum, negativity
from .errors import *  # noqa: F401,F403
from .linalg import (
    EigenDecomposition,
    anticommutator,
    commutator,
    hermitian_eig,
    kron,
    matrix_exp_antihermitian,
    matrix_sqrt_psd,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .measures import mixedness, purity, skew_information, skew_information_rewritten, variance
from .premeasure import (
    HamiltonianModel,
    PremeasurementSetup,
    cnot_unitary,
    default_measurement_hamiltonian,
    evolve_joint,
    premeasure_state,
    premeasurement_isometry,
)
from .qubit_analytic import (
    QubitScanPoint,
    mixedness_closed_form,
    negativity_closed_form,
    negativity_geometric,
    premeasurement_state_explicit,
    skew_closed_form_cartesian,
    skew_closed_form_spherical,
)
from .rng import SplitMix64
from .settings import NumericSettings, get_settings, use_settings
from .states import (
    PVM,
    BlochVector,
    DensityMatrix,
    Observable,
    SphericalBloch,
    bloch_from_density,
    density_from_bloch,
    pvm_from_observable,
    random_density,
    spherical_to_cartesian,
)

__version__ = "0.1.0"
