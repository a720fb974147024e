"""Closed-form qubit results for a sigma_z premeasurement.

For ``rho = (1 + n . sigma) / 2`` with ``n = |n|`` and polar angle
``theta`` from the measured axis ``z``:

* skew information ``I = (1 - sqrt(1 - n^2)) sin^2(theta)``; in Cartesian
  components ``sin^2(theta) = (n_x^2 + n_y^2) / n^2``;
* mixedness ``M = (1 - n^2) / 2``;
* negativity of the CNOT premeasurement state ``N = n sin(theta) / 2``.

Since ``1 - 2M = n^2`` and ``(1 - sqrt(2M)) (1 + sqrt(2M)) = n^2``, the
negativity is a function of the two measures alone:

    N = sqrt((1 + sqrt(2 M)) I) / 2
      = (1 - sqrt(2 M))^{-1/2} sqrt(n^2 I) / 2.

The second line carries ``n^2 I = (1 - sqrt(1 - n^2)) (n_x^2 + n_y^2)``,
not ``I`` itself; feeding it plain ``I`` gives ``sin(theta) / 2``, which
does not vanish as ``n -> 0``. The first line is used here; it has no
singularity at the completely mixed state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import entangle, measures
from .errors import BlochOutOfBall, InconsistentInputs, NotUnitDirection, OutOfRange
from .premeasure import direction_setup, premeasure_state, sigma_z_setup
from .settings import get_settings
from .states import (
    SIGMA_Z,
    BlochVector,
    DensityMatrix,
    SphericalBloch,
    density_from_bloch,
    spherical_to_cartesian,
)


def _bloch(b) -> BlochVector:
    return b if isinstance(b, BlochVector) else BlochVector.from_array(b)


def skew_closed_form_cartesian(b: BlochVector) -> float:
    """``(1 - sqrt(1 - |n|^2)) (n_x^2 + n_y^2) / |n|^2``, zero at ``n = 0``."""
    b = _bloch(b)
    r2 = min(b.length_squared, 1.0)
    if r2 == 0.0:
        return 0.0
    # smallest eigenvalue (1 - |n|)/2 under the same floor matrix_sqrt_psd
    # applies; otherwise roundoff in r2 ~ 1 is amplified to ~1e-8
    if 0.5 * (1.0 - math.sqrt(r2)) <= get_settings().sqrt_zero_floor:
        r2 = 1.0
    # 1 - sqrt(1 - r2) == r2 / (1 + sqrt(1 - r2)), stable for small r2
    return (b.n_x**2 + b.n_y**2) / (1.0 + math.sqrt(1.0 - r2))


def skew_closed_form_spherical(s: SphericalBloch) -> float:
    """``(1 - sqrt(1 - n^2)) sin^2 theta``, evaluated without cancellation at small ``n``."""
    n2 = s.n * s.n
    return n2 / (1.0 + math.sqrt(1.0 - n2)) * math.sin(s.theta) ** 2


def mixedness_closed_form(n: float) -> float:
    if not 0.0 <= n <= 1.0:
        raise OutOfRange(f"Bloch length {n} outside [0, 1]")
    return 0.5 * (1.0 - n * n)


def negativity_closed_form(skew: float, mixedness: float, n: float) -> float:
    """Negativity of the premeasurement state from skew information and mixedness.

    ``sqrt((1 + sqrt(2 M)) I) / 2``; zero when ``n <= n_floor`` (the
    completely mixed input creates no entanglement). ``n`` only selects
    that branch.
    """
    s = get_settings()
    if 2.0 * mixedness > 1.0 + s.trace_atol or mixedness < -s.clamp_window:
        raise InconsistentInputs(f"mixedness {mixedness} outside the qubit range [0, 1/2]")
    if skew < -s.clamp_window:
        raise InconsistentInputs(f"negative skew information {skew}")
    if n <= s.n_floor:
        return 0.0
    root = math.sqrt(min(max(2.0 * mixedness, 0.0), 1.0))
    return 0.5 * math.sqrt((1.0 + root) * max(skew, 0.0))


def negativity_geometric(b: BlochVector, m) -> float:
    """``sqrt(|n|^2 - (n . m)^2) / 2`` for a measurement along unit ``m``.

    This is the sigma_z result rotated to an arbitrary axis; it is checked
    against the full numeric pipeline in the test suite.
    """
    m = np.asarray(m, dtype=float)
    if abs(np.linalg.norm(m) - 1.0) > get_settings().unit_atol:
        raise NotUnitDirection(f"|m| = {np.linalg.norm(m)!r}")
    n = _bloch(b).as_array()
    along = float(n @ m)
    return 0.5 * math.sqrt(max(float(n @ n) - along * along, 0.0))


def premeasurement_state_explicit(b: BlochVector) -> DensityMatrix:
    """Four-term premeasurement state after the CNOT, basis ``|SM>``."""
    b = _bloch(b)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1 + b.n_z) / 2
    rho[3, 3] = (1 - b.n_z) / 2
    rho[3, 0] = (b.n_x + 1j * b.n_y) / 2
    rho[0, 3] = (b.n_x - 1j * b.n_y) / 2
    return DensityMatrix(rho, (2, 2))


def numeric_negativity(b: BlochVector, direction=None) -> float:
    """Premeasure ``rho(b)`` along ``direction`` (default ``z``) and take the negativity."""
    setup = sigma_z_setup() if direction is None else direction_setup(direction)
    joint = premeasure_state(density_from_bloch(_bloch(b)), setup)
    return entangle.negativity(joint, 2, 2)


@dataclass(frozen=True)
class QubitScanPoint:
    n: float
    theta: float
    phi: float
    skew: float
    skew_numeric: float
    mixedness: float
    mixedness_numeric: float
    negativity_closed: float
    negativity_numeric: float

    @property
    def abs_diff(self) -> float:
        return abs(self.negativity_closed - self.negativity_numeric)


def scan_point(n: float, theta: float, phi: float) -> QubitScanPoint:
    """Evaluate closed forms and the numeric pipeline at one Bloch vector."""
    sph = SphericalBloch(n, theta, phi)
    b = spherical_to_cartesian(sph)
    rho = density_from_bloch(b)
    skew = skew_closed_form_spherical(sph)
    mix = mixedness_closed_form(n)
    return QubitScanPoint(
        n=n,
        theta=theta,
        phi=phi,
        skew=skew,
        skew_numeric=measures.skew_information(rho, SIGMA_Z),
        mixedness=mix,
        mixedness_numeric=measures.mixedness(rho),
        negativity_closed=negativity_closed_form(skew, mix, n),
        negativity_numeric=numeric_negativity(b),
    )


def grid_axes(
    n_steps: int, theta_steps: int, theta_max: float = math.pi
) -> tuple[np.ndarray, np.ndarray]:
    """Evenly spaced ``n`` in [0, 1] and ``theta`` in [0, theta_max], endpoints included."""
    return np.linspace(0.0, 1.0, n_steps), np.linspace(0.0, theta_max, theta_steps)


def scan_grid(
    n_steps: int = 11,
    theta_steps: int = 13,
    phis: Iterable[float] = (0.0, math.pi / 2, math.pi),
    theta_max: float = math.pi,
) -> list[QubitScanPoint]:
    """Scan points ordered by (n index, theta index, phi index)."""
    ns, thetas = grid_axes(n_steps, theta_steps, theta_max)
    phis = list(phis)
    return [scan_point(float(n), float(t), float(p)) for n in ns for t in thetas for p in phis]
