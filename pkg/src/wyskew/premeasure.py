"""Premeasurement: coupling a system to a pointer before any readout.

Two routes produce the joint system + apparatus state:

* the controlled-shift isometry ``V = sum_k X_k (x) |k>``, which sends
  ``|psi>`` to ``sum_k (X_k |psi>) (x) |k>``;
* unitary evolution under ``H_S (x) 1 + 1 (x) H_M + H_int`` starting from
  ``rho_in (x) |0><0|``.

Joint spaces are ordered system first, apparatus second. The apparatus
always starts in its pointer state ``|0>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InvalidPVM, NonpositiveDuration
from .states import (
    PVM,
    SIGMA_X,
    DensityMatrix,
    Observable,
    as_density,
    computational_pvm,
    ket,
    projector,
    pvm_from_observable,
    qubit_observable,
)

SYSTEM_FIRST = "system-first"


@dataclass(frozen=True, eq=False)
class PremeasurementSetup:
    pvm: PVM
    ordering: str = SYSTEM_FIRST

    def __post_init__(self):
        if not isinstance(self.pvm, PVM):
            raise InvalidPVM("setup requires a validated PVM")
        if self.ordering != SYSTEM_FIRST:
            raise ValueError(f"only {SYSTEM_FIRST!r} ordering is supported")

    @property
    def system_dim(self) -> int:
        return self.pvm.dim

    @property
    def apparatus_dim(self) -> int:
        return len(self.pvm)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.system_dim, self.apparatus_dim)


def sigma_z_setup() -> PremeasurementSetup:
    return PremeasurementSetup(computational_pvm(2))


def direction_setup(direction) -> PremeasurementSetup:
    """Qubit measurement of ``m . sigma``; outcome 0 is the ``+1`` eigenspace."""
    return PremeasurementSetup(pvm_from_observable(qubit_observable(direction)))


def premeasurement_isometry(setup: PremeasurementSetup) -> np.ndarray:
    """The ``(dS*K) x dS`` isometry ``sum_k X_k (x) |k>``."""
    K = setup.apparatus_dim
    V = np.zeros((setup.system_dim * K, setup.system_dim), dtype=complex)
    for k, Xk in enumerate(setup.pvm):
        V += linalg.kron(Xk, ket(k, K)[:, None])
    return V


def premeasure_state(rho_in, setup: PremeasurementSetup) -> DensityMatrix:
    R = as_density(rho_in).matrix
    if R.shape[0] != setup.system_dim:
        raise DimensionMismatch(
            f"state dim {R.shape[0]} does not match measurement dim {setup.system_dim}"
        )
    V = premeasurement_isometry(setup)
    out = V @ R @ linalg.dagger(V)
    return DensityMatrix(0.5 * (out + linalg.dagger(out)), setup.dims)


def dephased_state(rho_in, pvm: PVM) -> np.ndarray:
    """``sum_k X_k rho X_k``, the system marginal after premeasurement."""
    R = as_density(rho_in).matrix
    return sum(P @ R @ P for P in pvm)


def cnot_unitary() -> np.ndarray:
    """Controlled-NOT with the system as control and the apparatus as target."""
    U = np.zeros((4, 4), dtype=complex)
    U[0, 0] = U[1, 1] = 1.0
    U[2, 3] = U[3, 2] = 1.0
    return U


@dataclass(frozen=True, eq=False)
class HamiltonianModel:
    """``H_tot = H_S (x) 1_M + 1_S (x) H_M + H_int`` switched on for ``tau``."""

    h_system: Observable
    h_apparatus: Observable
    h_int: Observable
    tau: float

    def __post_init__(self):
        if not self.tau > 0:
            raise NonpositiveDuration(f"interaction time must be positive, got {self.tau}")
        for name in ("h_system", "h_apparatus", "h_int"):
            value = getattr(self, name)
            if not isinstance(value, Observable):
                object.__setattr__(self, name, Observable(value))
        if self.h_int.dim != self.h_system.dim * self.h_apparatus.dim:
            raise DimensionMismatch(
                f"H_int dim {self.h_int.dim} != {self.h_system.dim} x {self.h_apparatus.dim}"
            )

    @property
    def dims(self) -> tuple[int, int]:
        return (self.h_system.dim, self.h_apparatus.dim)

    def total_hamiltonian(self) -> np.ndarray:
        dS, dM = self.dims
        return (
            linalg.kron(self.h_system.matrix, np.eye(dM))
            + linalg.kron(np.eye(dS), self.h_apparatus.matrix)
            + self.h_int.matrix
        )

    def propagator(self, t: float) -> np.ndarray:
        return linalg.matrix_exp_antihermitian(self.total_hamiltonian(), t)


def default_measurement_hamiltonian(tau: float = 1.0) -> HamiltonianModel:
    """Free Hamiltonians off, ``H_int = pi/(2 tau) |1><1| (x) (1 - sigma_x)``.

    ``1 - sigma_x`` has eigenvalues 0 and 2, so after time ``tau`` the
    apparatus picks up exactly ``sigma_x`` when the system is in ``|1>``;
    the propagator at ``tau`` is the CNOT itself, phases included.
    """
    if not tau > 0:
        raise NonpositiveDuration(f"interaction time must be positive, got {tau}")
    zero = np.zeros((2, 2), dtype=complex)
    h_int = (math.pi / (2.0 * tau)) * linalg.kron(projector(ket(1, 2)), np.eye(2) - SIGMA_X)
    return HamiltonianModel(Observable(zero), Observable(zero), Observable(h_int), tau)


def initial_joint_state(rho_in, apparatus_dim: int) -> DensityMatrix:
    """``rho_in (x) |0><0|``."""
    R = as_density(rho_in).matrix
    return DensityMatrix(
        linalg.kron(R, projector(ket(0, apparatus_dim))), (R.shape[0], apparatus_dim)
    )


def evolve_joint(rho0, model: HamiltonianModel, t: float) -> DensityMatrix:
    """``U(t) rho0 U(t)^dagger`` with ``U(t) = exp(-i H_tot t)``."""
    if t < 0:
        raise ValueError(f"evolution time must be nonnegative, got {t}")
    rho0 = as_density(rho0, model.dims)
    if rho0.dim != model.h_int.dim:
        raise DimensionMismatch(f"state dim {rho0.dim} vs Hamiltonian dim {model.h_int.dim}")
    U = model.propagator(t)
    out = U @ rho0.matrix @ linalg.dagger(U)
    return DensityMatrix(0.5 * (out + linalg.dagger(out)), model.dims)
