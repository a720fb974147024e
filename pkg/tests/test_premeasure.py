import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wyskew import linalg, measures
from wyskew.errors import DimensionMismatch, InvalidPVM, NonpositiveDuration
from wyskew.premeasure import (
    HamiltonianModel,
    PremeasurementSetup,
    cnot_unitary,
    default_measurement_hamiltonian,
    dephased_state,
    evolve_joint,
    initial_joint_state,
    premeasure_state,
    premeasurement_isometry,
    sigma_z_setup,
)
from wyskew.states import (
    PVM,
    BlochVector,
    DensityMatrix,
    density_from_bloch,
    ket,
    projector,
    random_density,
    random_hermitian,
    random_pvm,
)

KETS = {label: np.kron(ket(int(label[0]), 2), ket(int(label[1]), 2)) for label in ("00", "01", "10", "11")}


class TestIsometry:
    def test_trivial_measurement(self):
        V = premeasurement_isometry(PremeasurementSetup(PVM((np.eye(2),))))
        np.testing.assert_array_equal(V, np.eye(2))  # 1 (x) |0> with a 1-dim pointer

    def test_sigma_z_action(self):
        alpha, beta = 0.6, 0.8j
        out = premeasurement_isometry(sigma_z_setup()) @ np.array([alpha, beta])
        np.testing.assert_allclose(out, alpha * KETS["00"] + beta * KETS["11"])

    def test_degenerate_outcomes(self):
        pvm = PVM((np.diag([1, 1, 0, 0]), np.diag([0, 0, 1, 1])))
        V = premeasurement_isometry(PremeasurementSetup(pvm))
        assert V.shape == (8, 4)
        assert linalg.max_abs(linalg.dagger(V) @ V - np.eye(4)) <= 1e-12

    def test_setup_requires_pvm(self):
        with pytest.raises(InvalidPVM):
            PremeasurementSetup([np.eye(2)])

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 2**32), dim=st.integers(2, 6), k=st.integers(2, 4))
    def test_random_pvms_isometric(self, seed, dim, k):
        setup = PremeasurementSetup(random_pvm(dim, min(k, dim), seed))
        V = premeasurement_isometry(setup)
        assert V.shape == (dim * setup.apparatus_dim, dim)
        assert linalg.max_abs(linalg.dagger(V) @ V - np.eye(dim)) <= 1e-10


class TestPremeasureState:
    def test_completely_mixed_input(self):
        out = premeasure_state(DensityMatrix(np.eye(2) / 2), sigma_z_setup())
        np.testing.assert_allclose(out.matrix, np.diag([0.5, 0, 0, 0.5]))
        assert out.dims == (2, 2)

    def test_plus_state_gives_bell_projector(self):
        out = premeasure_state(density_from_bloch(BlochVector(1, 0, 0)), sigma_z_setup())
        bell = (KETS["00"] + KETS["11"]) / math.sqrt(2)
        np.testing.assert_allclose(out.matrix, projector(bell), atol=1e-15)

    def test_four_term_expansion(self):
        nx, ny, nz = 0.3, -0.2, 0.5
        out = premeasure_state(density_from_bloch(BlochVector(nx, ny, nz)), sigma_z_setup()).matrix
        expected = (
            (1 + nz) / 2 * np.outer(KETS["00"], KETS["00"])
            + (nx + 1j * ny) / 2 * np.outer(KETS["11"], KETS["00"])
            + (nx - 1j * ny) / 2 * np.outer(KETS["00"], KETS["11"])
            + (1 - nz) / 2 * np.outer(KETS["11"], KETS["11"])
        )
        np.testing.assert_allclose(out, expected, atol=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            premeasure_state(DensityMatrix(np.eye(3) / 3), sigma_z_setup())

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**32), dim=st.integers(2, 5), k=st.integers(2, 4))
    def test_marginals(self, seed, dim, k):
        k = min(k, dim)
        pvm = random_pvm(dim, k, seed)
        rho = random_density(dim, None, seed + 1)
        joint = premeasure_state(rho, PremeasurementSetup(pvm))
        system = linalg.partial_trace(joint.matrix, dim, k, "B")
        pointer = linalg.partial_trace(joint.matrix, dim, k, "A")
        assert linalg.max_abs(system - dephased_state(rho, pvm)) <= 1e-12
        born = [np.real(np.trace(P @ rho.matrix)) for P in pvm]
        assert linalg.max_abs(pointer - np.diag(born)) <= 1e-12


class TestCnot:
    def test_basis_action(self):
        U = cnot_unitary()
        np.testing.assert_array_equal(U @ KETS["00"], KETS["00"])
        np.testing.assert_array_equal(U @ KETS["10"], KETS["11"])

    def test_involution_and_unitary(self):
        U = cnot_unitary()
        np.testing.assert_array_equal(U @ U, np.eye(4))
        np.testing.assert_array_equal(linalg.dagger(U) @ U, np.eye(4))


class TestHamiltonian:
    @pytest.mark.parametrize("tau", [0.1, 1.0, 7.5])
    def test_cnot_at_tau(self, tau):
        model = default_measurement_hamiltonian(tau)
        U = model.propagator(tau)
        assert linalg.max_abs(U - cnot_unitary()) <= 1e-10
        np.testing.assert_allclose(U @ KETS["10"], KETS["11"], atol=1e-10)
        np.testing.assert_allclose(U @ KETS["00"], KETS["00"], atol=1e-15)

    def test_half_time_superposition(self):
        model = default_measurement_hamiltonian(2.0)
        psi = model.propagator(1.0) @ KETS["10"]
        # target block exp(-i pi/4 (1 - sigma_x)) acting on |0>
        block = linalg.matrix_exp_antihermitian((math.pi / 4) * (np.eye(2) - np.array([[0, 1], [1, 0]])), 1.0)
        np.testing.assert_allclose(psi[2:], block[:, 0], atol=1e-14)
        assert abs(psi[3]) ** 2 == pytest.approx(0.5, abs=1e-12)

    def test_nonpositive_duration(self):
        with pytest.raises(NonpositiveDuration):
            default_measurement_hamiltonian(0.0)
        with pytest.raises(NonpositiveDuration):
            HamiltonianModel(np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((4, 4)), -1.0)

    def test_inconsistent_dims(self):
        with pytest.raises(DimensionMismatch):
            HamiltonianModel(np.zeros((2, 2)), np.zeros((3, 3)), np.zeros((4, 4)), 1.0)


class TestEvolveJoint:
    def test_zero_time(self):
        rho0 = initial_joint_state(density_from_bloch(BlochVector(0.1, 0.2, 0.3)), 2)
        out = evolve_joint(rho0, default_measurement_hamiltonian(1.0), 0.0)
        np.testing.assert_allclose(out.matrix, rho0.matrix, atol=1e-15)

    def test_no_interaction_keeps_product(self):
        a = random_density(2, 2, 1)
        b = random_density(3, 1, 2)
        model = HamiltonianModel(random_hermitian(2, 3), random_hermitian(3, 4), np.zeros((6, 6)), 1.0)
        out = evolve_joint(DensityMatrix(linalg.kron(a.matrix, b.matrix), (2, 3)), model, 1.3)
        ra = linalg.partial_trace(out.matrix, 2, 3, "B")
        rb = linalg.partial_trace(out.matrix, 2, 3, "A")
        assert linalg.max_abs(out.matrix - linalg.kron(ra, rb)) <= 1e-12

    @pytest.mark.parametrize("n", [(0, 0, 0), (1, 0, 0), (0.3, -0.4, 0.5), (0, 0.6, -0.8)])
    def test_matches_isometry_path(self, n):
        rho = density_from_bloch(BlochVector(*n))
        model = default_measurement_hamiltonian(1.7)
        via_ham = evolve_joint(initial_joint_state(rho, 2), model, model.tau)
        via_iso = premeasure_state(rho, sigma_z_setup())
        assert linalg.max_abs(via_ham.matrix - via_iso.matrix) <= 1e-9

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 2**32), t=st.floats(0, 10))
    def test_purity_conserved(self, seed, t):
        model = HamiltonianModel(random_hermitian(2, seed), random_hermitian(2, seed + 1),
                                 random_hermitian(4, seed + 2), 1.0)
        rho0 = DensityMatrix(random_density(4, None, seed + 3).matrix, (2, 2))
        out = evolve_joint(rho0, model, t)
        assert abs(measures.purity(out) - measures.purity(rho0)) <= 1e-10

    def test_negative_time(self):
        with pytest.raises(ValueError):
            evolve_joint(DensityMatrix(np.eye(4) / 4), default_measurement_hamiltonian(1.0), -1.0)
