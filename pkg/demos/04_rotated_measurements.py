"""
Measuring along other axes
==========================

Premeasuring along a unit axis m instead of z leaves only the part of the
Bloch vector transverse to m to be turned into entanglement:
N = sqrt(|n|^2 - (n.m)^2) / 2. This is checked here, not assumed.
"""

import numpy as np

from wyskew.qubit_analytic import negativity_geometric, numeric_negativity
from wyskew.rng import SplitMix64
from wyskew.states import BlochVector

rng = SplitMix64(7)
n = BlochVector(0.3, -0.5, 0.6)

worst = 0.0
for _ in range(10):
    m = rng.unit_vector(3)
    geo = negativity_geometric(n, m)
    num = numeric_negativity(n, m)
    worst = max(worst, abs(geo - num))
    print(f"m = {np.array2string(m, precision=3):<26} formula {geo:.6f}  pipeline {num:.6f}")
print(f"max difference {worst:.1e}")

# Parallel axis: the pointer just reads out a basis the state is already
# diagonal in, so nothing is entangled
axis = n.as_array() / n.length
print("along n:", numeric_negativity(n, axis))
