"""Negativity of bipartite states via the partial transpose."""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionMismatch
from .measures import clamp_nonnegative
from .settings import get_settings
from .states import DensityMatrix, as_density


def _transposed(rho, dimA: int, dimB: int) -> np.ndarray:
    R = as_density(rho).matrix
    if R.shape[0] != dimA * dimB:
        raise DimensionMismatch(f"state dim {R.shape[0]} != {dimA} x {dimB}")
    return linalg.partial_transpose(R, dimA, dimB, linalg.FIRST)


def negativity(rho: DensityMatrix, dimA: int, dimB: int) -> float:
    """``(||rho^{T_A}||_1 - 1) / 2``.

    Always nonnegative; zero on every PPT state, in particular on product
    states.
    """
    value = 0.5 * (linalg.trace_norm(_transposed(rho, dimA, dimB)) - 1.0)
    return clamp_nonnegative(value, "negativity")


def negative_eigenvalue_sum(rho: DensityMatrix, dimA: int, dimB: int) -> float:
    """Sum of ``|lambda|`` over negative eigenvalues of ``rho^{T_A}``.

    Eigenvalues within ``zero_eigenvalue`` of zero are ignored.
    """
    w = linalg.eigvalsh(_transposed(rho, dimA, dimB))
    cutoff = get_settings().zero_eigenvalue
    return float(-np.sum(w[w < -cutoff]))
