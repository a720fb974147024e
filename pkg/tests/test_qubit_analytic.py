import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import sqrtm

from wyskew import linalg
from wyskew.errors import InconsistentInputs, NotUnitDirection, OutOfRange
from wyskew.premeasure import premeasure_state, sigma_z_setup
from wyskew.qubit_analytic import (
    grid_axes,
    mixedness_closed_form,
    negativity_closed_form,
    negativity_geometric,
    numeric_negativity,
    premeasurement_state_explicit,
    scan_grid,
    scan_point,
    skew_closed_form_cartesian,
    skew_closed_form_spherical,
)
from wyskew.rng import SplitMix64
from wyskew.states import BlochVector, SphericalBloch, density_from_bloch, spherical_to_cartesian

SZ = np.diag([1.0, -1.0])


def skew_oracle(n):
    """-1/2 Tr [sqrt(rho), sigma_z]^2 through scipy's Schur square root."""
    nx, ny, nz = n
    rho = 0.5 * np.array([[1 + nz, nx - 1j * ny], [nx + 1j * ny, 1 - nz]])
    # a projector is its own square root; sqrtm loses ~1e-9 on rank-1 input
    r = rho if math.isclose(nx * nx + ny * ny + nz * nz, 1.0, abs_tol=1e-15) else sqrtm(rho)
    c = r @ SZ - SZ @ r
    return float(-0.5 * np.trace(c @ c).real)


def negativity_oracle(n):
    """Negative PT eigenvalue of the 4-term state, via the closed 2x2 block."""
    nx, ny, _ = n
    return 0.5 * math.hypot(nx, ny)


class TestSkewClosedForms:
    @pytest.mark.parametrize("n", [(0, 0, 0), (0, 0, 0.7), (1, 0, 0), (0.4, 0.3, 0), (0.3, -0.2, 0.5),
                                   (0.6, 0, 0.8), (1e-9, 0, 0)])
    def test_cartesian_matches_oracle(self, n):
        assert skew_closed_form_cartesian(BlochVector(*n)) == pytest.approx(skew_oracle(n), abs=1e-10)

    def test_known_values(self):
        assert skew_closed_form_cartesian(BlochVector(0.4, 0.3, 0)) == pytest.approx(1 - math.sqrt(0.75), abs=1e-12)
        assert skew_closed_form_cartesian(BlochVector(1, 0, 0)) == pytest.approx(1.0, abs=1e-15)
        assert skew_closed_form_cartesian(BlochVector(0, 0, 1)) == 0.0
        assert skew_closed_form_spherical(SphericalBloch(1, math.pi / 2)) == pytest.approx(1.0)
        assert skew_closed_form_spherical(SphericalBloch(0.5, math.pi / 2)) == pytest.approx(1 - math.sqrt(0.75))
        assert skew_closed_form_spherical(SphericalBloch(0.0, 1.0)) == 0.0

    @settings(max_examples=200, deadline=None)
    @given(n=st.floats(0, 1), theta=st.floats(0, math.pi), phi=st.floats(0, 2 * math.pi, exclude_max=True))
    def test_forms_agree(self, n, theta, phi):
        sph = SphericalBloch(n, theta, phi)
        assert skew_closed_form_cartesian(spherical_to_cartesian(sph)) == pytest.approx(
            skew_closed_form_spherical(sph), abs=1e-12)


class TestMixedness:
    def test_values(self):
        assert mixedness_closed_form(0.5) == 0.375
        assert mixedness_closed_form(0.0) == 0.5
        assert mixedness_closed_form(1.0) == 0.0

    @pytest.mark.parametrize("n", [-0.1, 1.0001])
    def test_range(self, n):
        with pytest.raises(OutOfRange):
            mixedness_closed_form(n)


class TestNegativityClosedForm:
    def test_completely_mixed(self):
        assert negativity_closed_form(0.0, 0.5, 0.0) == 0.0

    def test_pure_equatorial(self):
        assert negativity_closed_form(1.0, 0.0, 1.0) == pytest.approx(0.5)

    def test_half_length_equatorial(self):
        # true skew information of n = 0.5 on the equator
        assert negativity_closed_form(1 - math.sqrt(0.75), 0.375, 0.5) == pytest.approx(0.25, abs=1e-12)

    @pytest.mark.parametrize("args", [(0.1, 0.6, 0.5), (-0.1, 0.2, 0.5), (0.1, -0.01, 0.5)])
    def test_inconsistent(self, args):
        with pytest.raises(InconsistentInputs):
            negativity_closed_form(*args)

    @settings(max_examples=200, deadline=None)
    @given(n=st.floats(0, 1), theta=st.floats(0, math.pi))
    def test_equals_n_sin_theta_over_two(self, n, theta):
        sph = SphericalBloch(n, theta)
        got = negativity_closed_form(skew_closed_form_spherical(sph), mixedness_closed_form(n), n)
        # below the 1e-8 floor the input counts as completely mixed
        tol = 1e-12 if n > 1e-8 else 0.5e-8
        assert got == pytest.approx(0.5 * n * math.sin(theta), abs=tol)


class TestGeometric:
    def test_examples(self):
        assert negativity_geometric(BlochVector(0.6, 0, 0.8), (1, 0, 0)) == pytest.approx(0.4)
        assert negativity_geometric(BlochVector(0.6, 0, 0.8), (0.6, 0, 0.8)) == pytest.approx(0.0, abs=1e-8)
        assert negativity_geometric(BlochVector(0.3, 0.4, 0), (0, 0, 1)) == pytest.approx(0.25)

    def test_not_unit(self):
        with pytest.raises(NotUnitDirection):
            negativity_geometric(BlochVector(0.1, 0, 0), (1, 1, 0))

    def test_random_pairs_against_pipeline(self):
        rng = SplitMix64(99)
        worst = 0.0
        for _ in range(200):
            n = rng.unit_vector() * rng.uniform() ** (1 / 3)
            m = rng.unit_vector()
            b = BlochVector.from_array(n)
            worst = max(worst, abs(negativity_geometric(b, m) - numeric_negativity(b, m)))
        assert worst <= 1e-10


class TestExplicitState:
    @pytest.mark.parametrize("n", [(0, 0, 0), (1, 0, 0), (0.3, -0.2, 0.5), (0, 0.6, -0.8)])
    def test_matches_isometry(self, n):
        b = BlochVector(*n)
        explicit = premeasurement_state_explicit(b)
        via = premeasure_state(density_from_bloch(b), sigma_z_setup())
        assert linalg.max_abs(explicit.matrix - via.matrix) <= 1e-15
        assert explicit.dims == (2, 2)

    def test_mixed_is_diagonal(self):
        np.testing.assert_array_equal(premeasurement_state_explicit(BlochVector(0, 0, 0)).matrix,
                                      np.diag([0.5, 0, 0, 0.5]))

    @pytest.mark.parametrize("n", [(0.3, -0.2, 0.5), (0.4, 0.3, 0), (0.6, 0, 0.8)])
    def test_numeric_negativity(self, n):
        assert numeric_negativity(BlochVector(*n)) == pytest.approx(negativity_oracle(n), abs=1e-12)


class TestScan:
    def test_axes(self):
        ns, ts = grid_axes(11, 13)
        assert ns[0] == 0 and ns[-1] == 1 and len(ns) == 11
        assert ts[-1] == pytest.approx(math.pi) and len(ts) == 13

    def test_point(self):
        p = scan_point(0.5, math.pi / 2, 0.3)
        assert p.skew == pytest.approx(1 - math.sqrt(0.75))
        assert p.skew_numeric == pytest.approx(p.skew, abs=1e-12)
        assert p.mixedness == p.mixedness_numeric == pytest.approx(0.375)
        assert p.negativity_closed == pytest.approx(0.25)
        assert p.abs_diff <= 1e-12

    def test_phi_independence(self):
        pts = scan_grid(5, 7, phis=(0.0, 1.0, math.pi, 5.0))
        for i in range(0, len(pts), 4):
            group = pts[i:i + 4]
            assert max(p.skew_numeric for p in group) - min(p.skew_numeric for p in group) <= 1e-10
            assert max(p.negativity_numeric for p in group) - min(p.negativity_numeric for p in group) <= 1e-10

    def test_grid_order_and_accuracy(self):
        pts = scan_grid(3, 4, phis=(0.0, 1.0))
        assert len(pts) == 24
        assert [(p.n, p.phi) for p in pts[:3]] == [(0.0, 0.0), (0.0, 1.0), (0.0, 0.0)]
        assert max(p.abs_diff for p in pts) <= 1e-12
