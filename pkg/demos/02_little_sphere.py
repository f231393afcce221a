"""
The little sphere
=================

Measuring a fixed state along every possible axis sweeps out a small sphere
whose diameter joins the state point to the center of the ball.
"""

import numpy as np

from entsphere import sphere

state = sphere.SphericalPoint(0.8, 0.7, 1.9)
p = state.to_cartesian()
grid = sphere.fibonacci_grid(400)

outs = np.array(sphere.little_sphere_locus(p, grid))
dist = np.linalg.norm(outs - p / 2, axis=1)
print(f"state point {np.round(p, 4)}, |p|/2 = {np.linalg.norm(p) / 2:.6f}")
print(f"distance of the 400 projected points to p/2: min {dist.min():.15f} max {dist.max():.15f}")

# The same points come from the density-matrix update
d = sphere.density_from_point(state)
via_matrix = np.array([sphere.bloch_vector(sphere.luder_single(d, n)) for n in grid])
print("max difference to the matrix update:", np.abs(via_matrix - outs).max())

# Measuring along the state's own axis leaves it alone,
# measuring perpendicular to it sends it to the center
own = sphere.Direction(state.theta, state.phi)
print("own axis  :", np.round(sphere.project_onto_direction(p, own), 12))
perp = sphere.Direction.from_vector(np.cross(p, [0.0, 0.0, 1.0]))
print("orthogonal:", np.round(sphere.project_onto_direction(p, perp), 12))
