"""Validated states, Bloch parametrisation, observables and PVMs.

Pauli matrices are in the standard basis with ``|0> = (1, 0)``,
``|1> = (0, 1)`` and ``sigma_y = [[0, -i], [i, 0]]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .errors import (
    BadRank,
    BlochOutOfBall,
    DimensionMismatch,
    InvalidDensityMatrix,
    InvalidPVM,
    NotHermitian,
    OutOfRange,
)
from .rng import as_rng
from .settings import get_settings

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)


def ket(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def projector(vec) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    return np.outer(vec, np.conj(vec))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix.

    ``dims`` records the tensor factors (product must equal the matrix
    dimension); a single-system state has ``dims == (d,)``.
    """

    matrix: np.ndarray
    dims: tuple[int, ...] = ()

    def __post_init__(self):
        s = get_settings()
        M = linalg.as_matrix(self.matrix)
        dims = tuple(int(d) for d in self.dims) or (M.shape[0],)
        if math.prod(dims) != M.shape[0]:
            raise DimensionMismatch(f"dims {dims} do not multiply to {M.shape[0]}")
        herm = linalg.hermiticity_error(M)
        if herm > s.hermitian_atol:
            raise InvalidDensityMatrix(f"not Hermitian (error {herm:.3e})")
        tr = np.trace(M)
        if abs(tr - 1.0) > s.trace_atol:
            raise InvalidDensityMatrix(f"trace {tr} differs from 1")
        w0 = linalg.eigvalsh(M)[0]
        if w0 < s.psd_floor:
            raise InvalidDensityMatrix(f"minimum eigenvalue {w0:.3e} is negative")
        M = M.copy()
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype)

    def __repr__(self):
        return f"DensityMatrix(dims={self.dims}, matrix=\n{np.array2string(self.matrix, precision=6)})"


@dataclass(frozen=True)
class BlochVector:
    n_x: float
    n_y: float
    n_z: float

    def __post_init__(self):
        if self.length_squared > 1.0 + get_settings().bloch_atol:
            raise BlochOutOfBall(f"|n|^2 = {self.length_squared!r} exceeds 1")

    @classmethod
    def from_array(cls, v) -> "BlochVector":
        x, y, z = (float(c) for c in np.asarray(v, dtype=float))
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.n_x, self.n_y, self.n_z])

    @property
    def length_squared(self) -> float:
        return self.n_x**2 + self.n_y**2 + self.n_z**2

    @property
    def length(self) -> float:
        return math.sqrt(self.length_squared)


@dataclass(frozen=True)
class SphericalBloch:
    """Bloch vector by length, polar angle and azimuth (radians)."""

    n: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.n <= 1.0:
            raise OutOfRange(f"Bloch length {self.n} outside [0, 1]")
        if not 0.0 <= self.theta <= math.pi:
            raise OutOfRange(f"polar angle {self.theta} outside [0, pi]")
        if not 0.0 <= self.phi <= 2.0 * math.pi:
            raise OutOfRange(f"azimuth {self.phi} outside [0, 2 pi)")


@dataclass(frozen=True, eq=False)
class Observable:
    matrix: np.ndarray

    def __post_init__(self):
        M = linalg.as_matrix(self.matrix)
        err = linalg.hermiticity_error(M)
        if err > get_settings().hermitian_atol:
            raise NotHermitian(f"observable is not Hermitian (error {err:.3e})")
        M = M.copy()
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class PVM:
    """Ordered projective measurement; outcome ``k`` is ``projectors[k]``."""

    projectors: tuple[np.ndarray, ...] = field(default_factory=tuple)

    def __post_init__(self):
        atol = get_settings().projector_atol
        projs = tuple(linalg.as_matrix(P).copy() for P in self.projectors)
        if not projs:
            raise InvalidPVM("a PVM needs at least one projector")
        d = projs[0].shape[0]
        for k, P in enumerate(projs):
            if P.shape != (d, d):
                raise InvalidPVM(f"projector {k} has shape {P.shape}, expected {(d, d)}")
            if linalg.max_abs(P @ P - P) > atol or linalg.hermiticity_error(P) > atol:
                raise InvalidPVM(f"element {k} is not an orthogonal projector")
        for j in range(len(projs)):
            for k in range(j + 1, len(projs)):
                if linalg.max_abs(projs[j] @ projs[k]) > atol:
                    raise InvalidPVM(f"projectors {j} and {k} are not orthogonal")
        if linalg.max_abs(sum(projs) - np.eye(d)) > atol:
            raise InvalidPVM("projectors do not sum to the identity")
        for P in projs:
            P.setflags(write=False)
        object.__setattr__(self, "projectors", projs)

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def __len__(self) -> int:
        return len(self.projectors)

    def __iter__(self):
        return iter(self.projectors)


def _matrix(x) -> np.ndarray:
    if isinstance(x, (DensityMatrix, Observable)):
        return x.matrix
    return linalg.as_matrix(x)


def density_from_bloch(b: BlochVector) -> DensityMatrix:
    """``(1 + n . sigma) / 2``."""
    if not isinstance(b, BlochVector):
        b = BlochVector.from_array(b)
    M = 0.5 * (IDENTITY2 + b.n_x * SIGMA_X + b.n_y * SIGMA_Y + b.n_z * SIGMA_Z)
    return DensityMatrix(M, (2,))


def bloch_from_density(rho) -> BlochVector:
    M = _matrix(rho)
    if M.shape != (2, 2):
        raise DimensionMismatch(f"Bloch vectors exist for qubits only, got dim {M.shape[0]}")
    n = [float(np.real(np.trace(M @ s))) for s in PAULIS]
    return BlochVector(*n)


def spherical_to_cartesian(s: SphericalBloch) -> BlochVector:
    st = math.sin(s.theta)
    return BlochVector(s.n * st * math.cos(s.phi), s.n * st * math.sin(s.phi), s.n * math.cos(s.theta))


def qubit_observable(direction) -> Observable:
    """``m . sigma`` for a real 3-vector ``m``."""
    m = np.asarray(direction, dtype=float)
    return Observable(m[0] * SIGMA_X + m[1] * SIGMA_Y + m[2] * SIGMA_Z)


def pvm_from_observable(X) -> PVM:
    """Spectral projectors of ``X``, largest eigenvalue first.

    Eigenvalues closer than ``degeneracy_atol`` share one projector. With
    this ordering ``sigma_z`` gives ``(|0><0|, |1><1|)``, so outcome 0 is
    the ``+1`` eigenspace.
    """
    M = X.matrix if isinstance(X, Observable) else Observable(X).matrix
    tol = get_settings().degeneracy_atol
    w, V = linalg.hermitian_eig(M)
    w, V = w[::-1], V[:, ::-1]
    groups: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if abs(w[i] - w[groups[-1][0]]) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    projs = [V[:, g] @ linalg.dagger(V[:, g]) for g in groups]
    return PVM(tuple(projs))


def computational_pvm(dim: int = 2) -> PVM:
    return PVM(tuple(projector(ket(k, dim)) for k in range(dim)))


def random_density(dim: int, rank: int | None = None, seed=0) -> DensityMatrix:
    """Random state ``G G^dagger / Tr(G G^dagger)``, ``G`` a ``dim x rank`` Gaussian.

    ``seed`` may be an integer or a ``SplitMix64`` (which is advanced).
    """
    if rank is None:
        rank = dim
    if not 1 <= rank <= dim:
        raise BadRank(f"rank {rank} not in [1, {dim}]")
    rng = as_rng(seed)
    G = rng.complex_normals((dim, rank))
    M = G @ linalg.dagger(G)
    M = 0.5 * (M + linalg.dagger(M))
    return DensityMatrix(M / np.real(np.trace(M)), (dim,))


def random_hermitian(dim: int, seed=0) -> np.ndarray:
    rng = as_rng(seed)
    G = rng.complex_normals((dim, dim))
    return 0.5 * (G + linalg.dagger(G))


def random_unitary(dim: int, seed=0) -> np.ndarray:
    """Unitary ``exp(-i H)`` for a random Hermitian ``H``."""
    return linalg.matrix_exp_antihermitian(random_hermitian(dim, seed), 1.0)


def random_pvm(dim: int, outcomes: int, seed=0) -> PVM:
    """Random PVM with ``outcomes`` nonzero projectors on ``dim``."""
    if not 1 <= outcomes <= dim:
        raise InvalidPVM(f"cannot split dimension {dim} into {outcomes} outcomes")
    rng = as_rng(seed)
    U = random_unitary(dim, rng)
    # every outcome gets one column, the rest are assigned at random
    labels = list(range(outcomes)) + [rng.integers(0, outcomes - 1) for _ in range(dim - outcomes)]
    projs = []
    for k in range(outcomes):
        cols = [i for i, lab in enumerate(labels) if lab == k]
        projs.append(U[:, cols] @ linalg.dagger(U[:, cols]))
    return PVM(tuple(projs))


def tensor_states(*states: DensityMatrix) -> DensityMatrix:
    M = np.eye(1, dtype=complex)
    dims: list[int] = []
    for st in states:
        M = linalg.kron(M, st.matrix)
        dims.extend(st.dims)
    return DensityMatrix(M, tuple(dims))


def as_density(rho, dims: Sequence[int] = ()) -> DensityMatrix:
    if isinstance(rho, DensityMatrix):
        return rho
    return DensityMatrix(np.asarray(rho, dtype=complex), tuple(dims))
