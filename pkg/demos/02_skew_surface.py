"""
Skew information over the Bloch ball
====================================

Tabulates I(rho, sigma_z) on an (n, theta) grid, closed form against the
numeric square-root pipeline. Write the table to CSV and plot it with any
external tool to see the surface; nothing here draws.
"""

import csv
import math
import sys

import numpy as np

from wyskew import measures
from wyskew.qubit_analytic import grid_axes, skew_closed_form_spherical
from wyskew.states import SIGMA_Z, SphericalBloch, density_from_bloch, spherical_to_cartesian

ns, thetas = grid_axes(11, 13)

out = sys.argv[1] if len(sys.argv) > 1 else None
rows = []
worst = 0.0
for n in ns:
    for t in thetas:
        s = SphericalBloch(float(n), float(t))
        closed = skew_closed_form_spherical(s)
        numeric = measures.skew_information(density_from_bloch(spherical_to_cartesian(s)), SIGMA_Z)
        worst = max(worst, abs(closed - numeric))
        rows.append((float(n), float(t), closed, numeric))

# A compact view: rows are n, columns are theta in steps of pi/12
surface = np.array([r[2] for r in rows]).reshape(len(ns), len(thetas))
with np.printoptions(precision=3, suppress=True, linewidth=120):
    print(surface)
print(f"\nmax |closed - numeric| = {worst:.2e}")

# Along the equator the value is 1 - sqrt(1 - n^2): flat near the centre,
# steep towards the pure states
for n in (0.2, 0.6, 0.9, 1.0):
    print(f"n = {n:.1f}  I = {skew_closed_form_spherical(SphericalBloch(n, math.pi / 2)):.6f}")

if out:
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "theta", "skew_closed", "skew_numeric"])
        w.writerows(rows)
    print("written", out)
