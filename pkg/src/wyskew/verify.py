"""Randomised invariant suites, shared by the ``verify`` command.

Each suite draws its own inputs from a SplitMix64 stream seeded by the
caller, evaluates one invariant over ``cases`` inputs and reports the worst
residual against a fixed tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import entangle, linalg, measures, premeasure, qubit_analytic
from .rng import SplitMix64
from .states import (
    SIGMA_Z,
    BlochVector,
    DensityMatrix,
    Observable,
    PVM,
    SphericalBloch,
    bloch_from_density,
    density_from_bloch,
    pvm_from_observable,
    random_density,
    random_hermitian,
    random_pvm,
    random_unitary,
    spherical_to_cartesian,
)


@dataclass(frozen=True)
class SuiteResult:
    module: str
    name: str
    worst: float
    tolerance: float
    cases: int

    @property
    def passed(self) -> bool:
        return self.worst <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}  {self.module + '.' + self.name:<40s} worst={self.worst:.3e}"
            f"  tol={self.tolerance:.1e}  cases={self.cases}"
        )


def random_bloch(rng: SplitMix64) -> BlochVector:
    direction = rng.unit_vector(3)
    return BlochVector.from_array(direction * rng.uniform() ** (1.0 / 3.0))


def random_bipartite(rng: SplitMix64, dA: int, dB: int, rank: int | None = None) -> DensityMatrix:
    rho = random_density(dA * dB, rank, rng)
    return DensityMatrix(rho.matrix, (dA, dB))


def _grid_blochs(n_steps=11, theta_steps=13, phis=(0.0, math.pi / 2, math.pi)):
    ns, thetas = qubit_analytic.grid_axes(n_steps, theta_steps)
    for n in ns:
        for t in thetas:
            for p in phis:
                s = SphericalBloch(float(n), float(t), float(p))
                yield s, spherical_to_cartesian(s)


# --- linalg -----------------------------------------------------------------

def eig_reconstruction(rng, cases):
    worst = 0.0
    for _ in range(cases):
        M = random_hermitian(rng.integers(2, 8), rng)
        w, V = linalg.hermitian_eig(M)
        err = linalg.max_abs(linalg.spectral_function(linalg.EigenDecomposition(w, V), w) - M)
        worst = max(worst, err / max(1.0, linalg.max_abs(M)))
    return worst


def eig_unitarity(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 8)
        _, V = linalg.hermitian_eig(random_hermitian(d, rng))
        worst = max(worst, linalg.max_abs(linalg.dagger(V) @ V - np.eye(d)))
    return worst


def sqrt_roundtrip(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 8)
        rho = random_density(d, rng.integers(1, d), rng).matrix
        S = linalg.matrix_sqrt_psd(rho)
        worst = max(worst, linalg.max_abs(S @ S - rho))
    return worst


def exp_unitarity(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 8)
        U = linalg.matrix_exp_antihermitian(random_hermitian(d, rng), 4.0 * rng.normal())
        worst = max(worst, linalg.max_abs(linalg.dagger(U) @ U - np.eye(d)))
    return worst


def partial_transpose_structure(rng, cases):
    """Involution, trace and Hermiticity preservation (max of the three)."""
    worst = 0.0
    for _ in range(cases):
        dA, dB = rng.integers(2, 3), rng.integers(2, 3)
        M = random_hermitian(dA * dB, rng)
        which = linalg.FIRST if rng.uniform() < 0.5 else linalg.SECOND
        T = linalg.partial_transpose(M, dA, dB, which)
        worst = max(
            worst,
            linalg.max_abs(linalg.partial_transpose(T, dA, dB, which) - M),
            abs(np.trace(T) - np.trace(M)),
            linalg.hermiticity_error(T),
        )
    return worst


def trace_norm_bound(rng, cases):
    worst = 0.0
    for _ in range(cases):
        M = random_hermitian(rng.integers(2, 6), rng)
        worst = max(worst, abs(np.trace(M)) - linalg.trace_norm(M))
    return max(worst, 0.0)


def kron_mixed_product(rng, cases):
    worst = 0.0
    for _ in range(cases):
        da, db = rng.integers(1, 3), rng.integers(1, 3)
        A, C = rng.complex_normals((da, da)), rng.complex_normals((da, da))
        B, D = rng.complex_normals((db, db)), rng.complex_normals((db, db))
        lhs = linalg.kron(A, B) @ linalg.kron(C, D)
        rhs = linalg.kron(A @ C, B @ D)
        worst = max(worst, linalg.max_abs(lhs - rhs) / max(1.0, linalg.max_abs(rhs)))
    return worst


# --- states -----------------------------------------------------------------

def bloch_roundtrip(rng, cases):
    worst = 0.0
    for _ in range(cases):
        rho = random_density(2, rng.integers(1, 2), rng)
        back = density_from_bloch(bloch_from_density(rho))
        worst = max(worst, linalg.max_abs(back.matrix - rho.matrix))
    return worst


def purity_grid(rng, cases):
    worst = 0.0
    for n in (0.0, 0.25, 0.5, 0.75, 1.0):
        for _ in range(max(1, cases // 20)):
            b = BlochVector.from_array(n * rng.unit_vector(3))
            worst = max(worst, abs(measures.purity(density_from_bloch(b)) - 0.5 * (1 + n * n)))
    return worst


def pvm_invariants(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 6)
        if rng.uniform() < 0.5:
            X = random_hermitian(d, rng)
        else:
            # force degeneracies: few distinct integer eigenvalues
            U = random_unitary(d, rng)
            X = (U * np.array([float(rng.integers(-1, 1)) for _ in range(d)])) @ linalg.dagger(U)
            X = 0.5 * (X + linalg.dagger(X))
        pvm = pvm_from_observable(X)
        P = pvm.projectors
        worst = max(worst, linalg.max_abs(sum(P) - np.eye(d)))
        for j, Pj in enumerate(P):
            worst = max(worst, linalg.max_abs(Pj @ Pj - Pj), linalg.hermiticity_error(Pj))
            for Pk in P[j + 1:]:
                worst = max(worst, linalg.max_abs(Pj @ Pk))
    return worst


# --- measures ---------------------------------------------------------------

def _random_pair(rng, dmin=2, dmax=6):
    d = rng.integers(dmin, dmax)
    return random_density(d, rng.integers(1, d), rng), Observable(random_hermitian(d, rng))


def skew_nonnegative(rng, cases):
    worst = 0.0
    for _ in range(cases):
        rho, X = _random_pair(rng)
        R, Xm = rho.matrix, X.matrix
        C = linalg.commutator(linalg.matrix_sqrt_psd(R), Xm)
        raw = -0.5 * float(np.real(np.trace(C @ C)))
        worst = max(worst, -raw)
    return max(worst, 0.0)


def skew_pure_is_variance(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 6)
        rho = random_density(d, 1, rng)
        X = Observable(random_hermitian(d, rng))
        worst = max(worst, abs(measures.skew_information(rho, X) - measures.variance(rho, X)))
    return worst


def skew_below_variance(rng, cases):
    worst = 0.0
    for _ in range(cases):
        rho, X = _random_pair(rng)
        worst = max(worst, measures.skew_information(rho, X) - measures.variance(rho, X))
    return max(worst, 0.0)


def skew_convexity(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 4)
        k = rng.integers(2, 4)
        states = [random_density(d, rng.integers(1, d), rng) for _ in range(k)]
        lam = np.array([rng.uniform() + 1e-3 for _ in range(k)])
        lam /= lam.sum()
        X = Observable(random_hermitian(d, rng))
        mix = DensityMatrix(sum(l * s.matrix for l, s in zip(lam, states)))
        lhs = measures.skew_information(mix, X)
        rhs = sum(l * measures.skew_information(s, X) for l, s in zip(lam, states))
        worst = max(worst, lhs - rhs)
    return max(worst, 0.0)


def skew_superadditivity(rng, cases):
    worst = 0.0
    for i in range(cases):
        da, db = 2, (2 if i % 2 == 0 else 3)
        rho_ab = random_bipartite(rng, da, db, rng.integers(1, da * db))
        Xa = random_hermitian(da, rng)
        rho_a = DensityMatrix(linalg.partial_trace(rho_ab.matrix, da, db, linalg.SECOND))
        big = measures.skew_information(rho_ab, linalg.kron(Xa, np.eye(db)))
        small = measures.skew_information(rho_a, Xa)
        worst = max(worst, small - big)
    return max(worst, 0.0)


def skew_definitions_agree(rng, cases):
    worst = 0.0
    for _ in range(cases):
        rho, X = _random_pair(rng)
        worst = max(
            worst,
            abs(measures.skew_information(rho, X) - measures.skew_information_rewritten(rho, X)),
        )
    return worst


# --- premeasure -------------------------------------------------------------

def isometry(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 6)
        k = rng.integers(2, min(4, d))
        V = premeasure.premeasurement_isometry(premeasure.PremeasurementSetup(random_pvm(d, k, rng)))
        worst = max(worst, linalg.max_abs(linalg.dagger(V) @ V - np.eye(d)))
    return worst


def premeasurement_paths_agree(rng, cases):
    model = premeasure.default_measurement_hamiltonian(1.0)
    setup = premeasure.sigma_z_setup()
    U = model.propagator(model.tau)
    worst = 0.0
    for _, b in _grid_blochs(6, 7):
        rho = density_from_bloch(b)
        via_iso = premeasure.premeasure_state(rho, setup).matrix
        joint = premeasure.initial_joint_state(rho, 2).matrix
        via_ham = U @ joint @ linalg.dagger(U)
        worst = max(worst, linalg.max_abs(via_iso - via_ham))
    return worst


def cnot_from_evolution(rng, cases):
    model = premeasure.default_measurement_hamiltonian(0.5 + rng.uniform())
    return linalg.max_abs(model.propagator(model.tau) - premeasure.cnot_unitary())


def apparatus_born_weights(rng, cases):
    worst = 0.0
    for _ in range(cases):
        d = rng.integers(2, 5)
        k = rng.integers(2, min(4, d))
        pvm = random_pvm(d, k, rng)
        rho = random_density(d, rng.integers(1, d), rng)
        joint = premeasure.premeasure_state(rho, premeasure.PremeasurementSetup(pvm))
        marginal = linalg.partial_trace(joint.matrix, d, k, linalg.FIRST)
        born = np.array([np.real(np.trace(P @ rho.matrix)) for P in pvm])
        system = linalg.partial_trace(joint.matrix, d, k, linalg.SECOND)
        worst = max(
            worst,
            linalg.max_abs(marginal - np.diag(born)),
            linalg.max_abs(system - premeasure.dephased_state(rho, pvm)),
        )
    return worst


def purity_conserved(rng, cases):
    worst = 0.0
    for _ in range(cases):
        dS, dM = 2, rng.integers(2, 3)
        model = premeasure.HamiltonianModel(
            random_hermitian(dS, rng), random_hermitian(dM, rng),
            random_hermitian(dS * dM, rng), 1.0,
        )
        rho0 = random_bipartite(rng, dS, dM, rng.integers(1, dS * dM))
        rho_t = premeasure.evolve_joint(rho0, model, 3.0 * rng.uniform())
        worst = max(worst, abs(measures.purity(rho_t) - measures.purity(rho0)))
    return worst


# --- entangle ---------------------------------------------------------------

def _random_split(rng):
    return [(2, 2), (2, 3), (3, 2), (3, 3)][rng.integers(0, 3)]


def negativity_paths_agree(rng, cases):
    worst = 0.0
    for _ in range(cases):
        dA, dB = _random_split(rng)
        rho = random_bipartite(rng, dA, dB, rng.integers(1, dA * dB))
        worst = max(
            worst,
            abs(entangle.negativity(rho, dA, dB) - entangle.negative_eigenvalue_sum(rho, dA, dB)),
        )
    return worst


def negativity_local_unitary(rng, cases):
    worst = 0.0
    for _ in range(cases):
        dA, dB = _random_split(rng)
        rho = random_bipartite(rng, dA, dB, rng.integers(1, dA * dB))
        U = linalg.kron(random_unitary(dA, rng), random_unitary(dB, rng))
        out = U @ rho.matrix @ linalg.dagger(U)
        rotated = DensityMatrix(0.5 * (out + linalg.dagger(out)), (dA, dB))
        worst = max(
            worst, abs(entangle.negativity(rho, dA, dB) - entangle.negativity(rotated, dA, dB))
        )
    return worst


def negativity_zero_on_axis(rng, cases):
    """Inputs diagonal in the measured basis stay unentangled."""
    setup = premeasure.sigma_z_setup()
    worst = 0.0
    for n_z in np.linspace(-1.0, 1.0, 21):
        joint = premeasure.premeasure_state(density_from_bloch(BlochVector(0, 0, float(n_z))), setup)
        worst = max(worst, entangle.negativity(joint, 2, 2))
    return worst


# --- qubit_analytic ---------------------------------------------------------

def central_relation(rng, cases):
    worst = 0.0
    for s, b in _grid_blochs():
        closed = qubit_analytic.negativity_closed_form(
            qubit_analytic.skew_closed_form_spherical(s),
            qubit_analytic.mixedness_closed_form(s.n),
            s.n,
        )
        worst = max(worst, abs(closed - qubit_analytic.numeric_negativity(b)))
    return worst


def azimuthal_invariance(rng, cases):
    worst = 0.0
    ns, thetas = qubit_analytic.grid_axes(11, 13)
    for n in ns:
        for t in thetas:
            values = [
                qubit_analytic.numeric_negativity(spherical_to_cartesian(SphericalBloch(n, t, p)))
                for p in (0.0, math.pi / 2, math.pi, 1.0 + rng.uniform())
            ]
            worst = max(worst, max(values) - min(values))
    return worst


def pure_sphere_profile(rng, cases):
    """n = 1: negativity is sin(theta)/2 and nondecreasing up to pi/2."""
    thetas = np.linspace(0.0, math.pi / 2, 25)
    values = [
        qubit_analytic.numeric_negativity(spherical_to_cartesian(SphericalBloch(1.0, t, 0.3)))
        for t in thetas
    ]
    worst = max(abs(v - 0.5 * math.sin(t)) for v, t in zip(values, thetas))
    drops = [max(0.0, a - b) for a, b in zip(values, values[1:])]
    return max(worst, max(drops))


def skew_closed_vs_numeric(rng, cases):
    worst = 0.0
    for s, b in _grid_blochs():
        numeric = measures.skew_information(density_from_bloch(b), SIGMA_Z)
        worst = max(
            worst,
            abs(numeric - qubit_analytic.skew_closed_form_spherical(s)),
            abs(numeric - qubit_analytic.skew_closed_form_cartesian(b)),
        )
    return worst


def geometric_vs_numeric(rng, cases):
    worst = 0.0
    for _ in range(cases):
        b = random_bloch(rng)
        m = rng.unit_vector(3)
        worst = max(
            worst,
            abs(qubit_analytic.negativity_geometric(b, m) - qubit_analytic.numeric_negativity(b, m)),
        )
    return worst


SUITES: list[tuple[str, str, Callable, float]] = [
    ("linalg", "eig_reconstruction", eig_reconstruction, 1e-11),
    ("linalg", "eig_unitarity", eig_unitarity, 1e-12),
    ("linalg", "sqrt_roundtrip", sqrt_roundtrip, 1e-9),
    ("linalg", "exp_unitarity", exp_unitarity, 1e-10),
    ("linalg", "partial_transpose_structure", partial_transpose_structure, 1e-12),
    ("linalg", "trace_norm_bound", trace_norm_bound, 1e-12),
    ("linalg", "kron_mixed_product", kron_mixed_product, 1e-12),
    ("states", "bloch_roundtrip", bloch_roundtrip, 1e-12),
    ("states", "purity_grid", purity_grid, 1e-12),
    ("states", "pvm_invariants", pvm_invariants, 1e-10),
    ("measures", "skew_nonnegative", skew_nonnegative, 1e-10),
    ("measures", "skew_pure_is_variance", skew_pure_is_variance, 1e-9),
    ("measures", "skew_below_variance", skew_below_variance, 1e-10),
    ("measures", "skew_convexity", skew_convexity, 1e-9),
    ("measures", "skew_superadditivity", skew_superadditivity, 1e-9),
    ("measures", "skew_definitions_agree", skew_definitions_agree, 1e-10),
    ("premeasure", "isometry", isometry, 1e-10),
    ("premeasure", "paths_agree", premeasurement_paths_agree, 1e-9),
    ("premeasure", "cnot_from_evolution", cnot_from_evolution, 1e-10),
    ("premeasure", "apparatus_born_weights", apparatus_born_weights, 1e-10),
    ("premeasure", "purity_conserved", purity_conserved, 1e-10),
    ("entangle", "negativity_paths_agree", negativity_paths_agree, 1e-10),
    ("entangle", "negativity_local_unitary", negativity_local_unitary, 1e-9),
    ("entangle", "negativity_zero_on_axis", negativity_zero_on_axis, 1e-12),
    ("qubit_analytic", "central_relation", central_relation, 1e-9),
    ("qubit_analytic", "azimuthal_invariance", azimuthal_invariance, 1e-10),
    ("qubit_analytic", "pure_sphere_profile", pure_sphere_profile, 1e-10),
    ("qubit_analytic", "skew_closed_vs_numeric", skew_closed_vs_numeric, 1e-10),
    ("qubit_analytic", "geometric_vs_numeric", geometric_vs_numeric, 1e-9),
]


def run_suites(seed: int = 2024, cases: int = 200, tolerance: float | None = None) -> list[SuiteResult]:
    """Run every suite in order; ``tolerance`` overrides all per-suite thresholds."""
    if cases < 1:
        raise ValueError("cases must be at least 1")
    results = []
    for index, (module, name, fn, tol) in enumerate(SUITES):
        rng = SplitMix64(seed * 1_000_003 + index)
        worst = float(fn(rng, cases))
        results.append(SuiteResult(module, name, worst, tol if tolerance is None else tolerance, cases))
    return results
