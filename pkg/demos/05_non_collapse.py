"""
Measuring one spin without reading the result
=============================================

The joint state is updated by the two-outcome projection rule.  The spin
that was not measured keeps its reduced density matrix exactly; the measured
spin's reduced density becomes the projection of its Bloch point.
"""

import math

import numpy as np

from entsphere import bipartite, measurement, sphere

psi = bipartite.schmidt_state(0.6)
n = sphere.Direction(math.pi / 3, 0.0)

res = measurement.luder_pair(psi, n)
print("D2 before:\n", np.round(bipartite.density_second(psi).real, 12))
print("D2 after :\n", np.round(res.d2_after.real, 12))
print("D1 after :\n", np.round(res.d1_after, 12))
print("closed form:\n", np.round(measurement.luder_d1_schmidt(0.6, n), 12))

# The update is the average of the two collapse outcomes
mix = sum(b.product_density() for b in measurement.collapse_pair(psi, n))
print("max |rho' - mixture of branches|:", np.abs(res.rho_after - mix).max())

# and the measured spin's Bloch point is the axis projection
p = sphere.bloch_vector(bipartite.density_first(psi))
print("D1' Bloch point:", np.round(sphere.bloch_vector(res.d1_after), 12))
print("projection     :", np.round(sphere.project_onto_direction(p, n), 12))
