"""
Entanglement from skew information and mixedness
================================================

The premeasured pair is entangled by exactly n sin(theta)/2. That number is
fixed by two properties of the input alone: how much information it holds
about the measured observable (skew information I) and how mixed it is (M):

    N = sqrt((1 + sqrt(2 M)) I) / 2
"""

import math

from wyskew.qubit_analytic import (
    mixedness_closed_form,
    negativity_closed_form,
    numeric_negativity,
    skew_closed_form_spherical,
)
from wyskew.states import SphericalBloch, spherical_to_cartesian

print(f"{'n':>5} {'theta':>7} {'I':>10} {'M':>8} {'N closed':>10} {'N numeric':>10}")
for n in (0.0, 0.3, 0.7, 1.0):
    for theta in (0.0, math.pi / 4, math.pi / 2):
        s = SphericalBloch(n, theta, 1.0)
        skew = skew_closed_form_spherical(s)
        mix = mixedness_closed_form(n)
        closed = negativity_closed_form(skew, mix, n)
        numeric = numeric_negativity(spherical_to_cartesian(s))
        print(f"{n:5.2f} {theta:7.4f} {skew:10.6f} {mix:8.4f} {closed:10.6f} {numeric:10.6f}")

# Two extremes: the completely mixed input never entangles, a pure state on
# the equator gives a Bell pair
print("\nn = 0:", numeric_negativity((0, 0, 0)))
print("pure, equator:", numeric_negativity((math.cos(0.3), math.sin(0.3), 0)))

# Mixedness by itself does not fix N: these share M but not I
for theta in (0.2, 1.0, math.pi / 2):
    s = SphericalBloch(0.6, theta)
    print(f"M = {mixedness_closed_form(0.6):.3f}  theta = {theta:.2f}  N = "
          f"{negativity_closed_form(skew_closed_form_spherical(s), mixedness_closed_form(0.6), 0.6):.4f}")
