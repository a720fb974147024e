"""
Premeasuring a qubit with a CNOT
================================

A qubit is coupled to a two-level pointer. We build the joint state twice,
once from the controlled-shift isometry and once by switching on an
interaction Hamiltonian for a time tau, and check that they agree.
"""

import math

import numpy as np

from wyskew import linalg
from wyskew.premeasure import (
    cnot_unitary,
    default_measurement_hamiltonian,
    evolve_joint,
    initial_joint_state,
    premeasure_state,
    sigma_z_setup,
)
from wyskew.states import SphericalBloch, density_from_bloch, spherical_to_cartesian

np.set_printoptions(precision=4, suppress=True)

# A mixed input, tilted away from the measured axis
b = spherical_to_cartesian(SphericalBloch(0.8, math.pi / 3, 0.5))
rho = density_from_bloch(b)
print("input state\n", rho.matrix)

# Route 1: V = sum_k X_k (x) |k>
joint = premeasure_state(rho, sigma_z_setup())
print("\npremeasurement state (system first)\n", joint.matrix)

# Only the |00><00|, |11><11| block survives, with the input coherence
# copied onto the |00><11| corner
print("\ncorner <00|rho|11> =", joint.matrix[0, 3], " input <0|rho|1> =", rho.matrix[0, 1])

# Route 2: H_int = pi/(2 tau) |1><1| (x) (1 - sigma_x), run for tau
model = default_measurement_hamiltonian(tau=2.0)
print("\n|U(tau) - CNOT| =", linalg.max_abs(model.propagator(model.tau) - cnot_unitary()))

for t in (0.0, 0.5, 1.0, 1.5, 2.0):
    state = evolve_joint(initial_joint_state(rho, 2), model, t)
    gap = linalg.max_abs(state.matrix - joint.matrix)
    print(f"t = {t:3.1f}   distance to premeasured state = {gap:.3e}")
