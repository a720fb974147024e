"""Scalar information measures: skew information, variance, purity, mixedness."""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InternalConsistencyError
from .settings import get_settings
from .states import DensityMatrix, Observable, as_density


def clamp_nonnegative(value: float, what: str = "value") -> float:
    """Map roundoff negatives in ``[-clamp_window, 0)`` to zero.

    Anything more negative signals a bug upstream and raises.
    """
    if value >= 0.0:
        return value + 0.0  # no signed zeros
    window = get_settings().clamp_window
    if value >= -window:
        return 0.0
    raise InternalConsistencyError(f"{what} = {value:.3e} is negative beyond roundoff")


def _operands(rho, X) -> tuple[np.ndarray, np.ndarray]:
    R = as_density(rho).matrix
    Xm = X.matrix if isinstance(X, Observable) else Observable(X).matrix
    if R.shape != Xm.shape:
        raise DimensionMismatch(f"state dim {R.shape[0]} vs observable dim {Xm.shape[0]}")
    return R, Xm


def skew_information(rho: DensityMatrix, X) -> float:
    """Wigner-Yanase skew information ``-1/2 Tr([sqrt(rho), X]^2)``."""
    R, Xm = _operands(rho, X)
    C = linalg.commutator(linalg.matrix_sqrt_psd(R), Xm)
    value = -0.5 * float(np.real(np.trace(C @ C)))
    return clamp_nonnegative(value, "skew information")


def skew_information_rewritten(rho: DensityMatrix, X) -> float:
    """Same quantity as ``Tr(rho X^2) - Tr(sqrt(rho) X sqrt(rho) X)``."""
    R, Xm = _operands(rho, X)
    S = linalg.matrix_sqrt_psd(R)
    value = float(np.real(np.trace(R @ Xm @ Xm) - np.trace(S @ Xm @ S @ Xm)))
    return clamp_nonnegative(value, "skew information")


def variance(rho: DensityMatrix, X) -> float:
    R, Xm = _operands(rho, X)
    mean = np.real(np.trace(R @ Xm))
    value = float(np.real(np.trace(R @ Xm @ Xm)) - mean**2)
    return clamp_nonnegative(value, "variance")


def purity(rho: DensityMatrix) -> float:
    R = as_density(rho).matrix
    return float(np.real(np.trace(R @ R)))


def mixedness(rho: DensityMatrix) -> float:
    """``Tr(rho) - Tr(rho^2)``: zero on pure states, ``1 - 1/d`` at most."""
    R = as_density(rho).matrix
    value = float(np.real(np.trace(R)) - np.real(np.trace(R @ R)))
    return clamp_nonnegative(value, "mixedness")
