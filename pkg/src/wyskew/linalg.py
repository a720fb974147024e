"""Dense complex linear algebra on small square matrices.

Matrices are plain ``numpy`` complex arrays. Hermitian eigenproblems are
solved by a cyclic complex Jacobi iteration; square roots and exponentials
are built on top of it spectrally.

Tensor products use the row-major convention: in ``kron(A, B)`` the first
factor carries the slow index, so entry ``(i*dB + k, j*dB + l)`` equals
``A[i, j] * B[k, l]``. Every bipartite routine in the package assumes this
ordering.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotHermitian,
    NotPositiveSemidefinite,
)
from .settings import get_settings

FIRST = "A"
SECOND = "B"


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # unitary, columns are eigenvectors


def as_matrix(M) -> np.ndarray:
    """Return ``M`` as a finite square complex128 array."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def dagger(M: np.ndarray) -> np.ndarray:
    return np.conj(M).T


def max_abs(M) -> float:
    M = np.asarray(M)
    return float(np.max(np.abs(M))) if M.size else 0.0


def hermiticity_error(M) -> float:
    M = np.asarray(M)
    return max_abs(M - dagger(M))


def is_hermitian(M, atol: float | None = None) -> bool:
    if atol is None:
        atol = get_settings().hermitian_atol
    return hermiticity_error(M) <= atol


def _require_hermitian(M) -> np.ndarray:
    M = as_matrix(M)
    err = hermiticity_error(M)
    tol = get_settings().hermitian_atol
    if err > tol:
        raise NotHermitian(f"||M - M^dagger||_max = {err:.3e} exceeds {tol:.1e}")
    return M


def hermitian_eig(M) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Each rotation acts on one index pair ``(p, q)`` with the unitary

        J = [[c, s e^{ia}], [-s e^{-ia}, c]],   a = arg M[p, q]

    chosen so that ``(J^dagger M J)[p, q] = 0``. Sweeps run over all pairs
    in row order until the off-diagonal Frobenius norm drops below
    ``jacobi_rel_tol * ||M||_F``.

    Raises
    ------
    NotHermitian
        If ``||M - M^dagger||_max`` exceeds the Hermiticity tolerance.
    NoConvergence
        If the sweep budget runs out.
    """
    settings = get_settings()
    A = _require_hermitian(M)
    A = 0.5 * (A + dagger(A))
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    threshold = settings.jacobi_rel_tol * np.linalg.norm(A)
    # entries this small cannot move the off-diagonal norm past the threshold
    negligible = 1e-3 * threshold / n

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm(A):
        return np.linalg.norm(A[offdiag])

    for _ in range(settings.jacobi_max_sweeps + 1):
        if off_norm(A) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag <= negligible:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                phase = apq / mag
                J = np.array([[c, s * phase], [-s * np.conj(phase), c]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ J
                A[idx, :] = dagger(J) @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                A[p, p] = app - t * mag
                A[q, q] = aqq + t * mag
                V[:, idx] = V[:, idx] @ J
    else:
        raise NoConvergence(
            f"Jacobi did not converge within {settings.jacobi_max_sweeps} sweeps"
        )

    w = np.real(np.diag(A)).copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], V[:, order])


def eigvalsh(M) -> np.ndarray:
    return hermitian_eig(M).eigenvalues


def spectral_function(decomp: EigenDecomposition, values) -> np.ndarray:
    """``V diag(values) V^dagger`` for a precomputed decomposition."""
    V = decomp.eigenvectors
    return (V * np.asarray(values)) @ dagger(V)


def matrix_sqrt_psd(M) -> np.ndarray:
    """Principal square root of a positive semidefinite matrix.

    Eigenvalues in ``[psd_floor, 0)`` are treated as roundoff and clamped
    to zero; anything more negative raises ``NotPositiveSemidefinite``.
    Positive eigenvalues below ``sqrt_zero_floor`` (relative to the largest)
    are zeroed as well: the square root would otherwise turn a 1e-17
    roundoff into a 3e-9 error, e.g. on pure states.
    """
    settings = get_settings()
    decomp = hermitian_eig(M)
    w = decomp.eigenvalues
    if w[0] < settings.psd_floor:
        raise NotPositiveSemidefinite(
            f"smallest eigenvalue {w[0]:.3e} below {settings.psd_floor:.1e}"
        )
    cutoff = settings.sqrt_zero_floor * max(1.0, float(np.max(np.abs(w))))
    w = np.where(w <= cutoff, 0.0, w)
    return spectral_function(decomp, np.sqrt(w))


def matrix_exp_antihermitian(H, t: float) -> np.ndarray:
    """``exp(-i t H)`` for Hermitian ``H`` (units with hbar = 1)."""
    decomp = hermitian_eig(H)
    return spectral_function(decomp, np.exp(-1j * t * decomp.eigenvalues))


def kron(A, B) -> np.ndarray:
    """Kronecker product, first factor slow.

    Rectangular inputs are accepted (needed for isometries into a larger
    space); the index convention is the same.
    """
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    B = np.atleast_2d(np.asarray(B, dtype=complex))
    ra, ca = A.shape
    rb, cb = B.shape
    return np.einsum("ij,kl->ikjl", A, B).reshape(ra * rb, ca * cb)


def _split(M, dimA: int, dimB: int) -> np.ndarray:
    M = as_matrix(M)
    if dimA < 1 or dimB < 1 or M.shape[0] != dimA * dimB:
        raise DimensionMismatch(
            f"matrix of dim {M.shape[0]} does not factor as {dimA} x {dimB}"
        )
    return M.reshape(dimA, dimB, dimA, dimB)


def partial_transpose(M, dimA: int, dimB: int, which: str = FIRST) -> np.ndarray:
    """Transpose the indices of one tensor factor.

    ``which`` is ``"A"`` (first factor) or ``"B"`` (second factor).
    """
    T = _split(M, dimA, dimB)
    if which == FIRST:
        T = T.transpose(2, 1, 0, 3)
    elif which == SECOND:
        T = T.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"which must be 'A' or 'B', got {which!r}")
    return T.reshape(dimA * dimB, dimA * dimB)


def partial_trace(M, dimA: int, dimB: int, traced: str = SECOND) -> np.ndarray:
    """Trace out one tensor factor; ``traced`` names the factor removed."""
    T = _split(M, dimA, dimB)
    if traced == SECOND:
        return np.einsum("ikjk->ij", T)
    if traced == FIRST:
        return np.einsum("kikj->ij", T)
    raise ValueError(f"traced must be 'A' or 'B', got {traced!r}")


def trace_norm(M) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(eigvalsh(M))))


def _same_shape(A, B):
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape} differ")
    return A, B


def commutator(A, B) -> np.ndarray:
    A, B = _same_shape(A, B)
    return A @ B - B @ A


def anticommutator(A, B) -> np.ndarray:
    A, B = _same_shape(A, B)
    return A @ B + B @ A
