"""Numeric tolerances used across the package.

All thresholds live in one frozen record. The active record is held in a
context variable, so overriding it inside ``use_settings`` is local to the
current thread / task and never leaks into other callers.
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class NumericSettings:
    hermitian_atol: float = 1e-12
    trace_atol: float = 1e-12
    psd_floor: float = -1e-10           # eigenvalues below this are not PSD
    sqrt_zero_floor: float = 1e-14      # relative; smaller eigenvalues -> 0 in sqrt
    projector_atol: float = 1e-10
    degeneracy_atol: float = 1e-9       # eigenvalue grouping in PVMs
    bloch_atol: float = 1e-12
    unit_atol: float = 1e-12
    clamp_window: float = 1e-10         # [-w, 0) -> 0 for nonnegative scalars
    zero_eigenvalue: float = 1e-11      # |lambda| below this counts as zero
    n_floor: float = 1e-8               # Bloch length treated as zero
    jacobi_rel_tol: float = 1e-13
    jacobi_max_sweeps: int = 100


DEFAULT_SETTINGS = NumericSettings()

_current: contextvars.ContextVar[NumericSettings] = contextvars.ContextVar(
    "wyskew_numeric_settings", default=DEFAULT_SETTINGS
)


def get_settings() -> NumericSettings:
    return _current.get()


@contextlib.contextmanager
def use_settings(**overrides) -> Iterator[NumericSettings]:
    """Temporarily replace selected tolerances.

    >>> with use_settings(hermitian_atol=1e-9) as s:
    ...     s.hermitian_atol
    1e-09
    """
    new = dataclasses.replace(get_settings(), **overrides)
    token = _current.set(new)
    try:
        yield new
    finally:
        _current.reset(token)
