"""
Single spin on the Bloch ball
=============================

Density matrices of one spin-1/2 are points of the closed unit ball; pure
states sit on its surface.  A Stern-Gerlach measurement that is not read out
moves the point onto the measurement axis by orthogonal projection.
"""

import math

import numpy as np

from entsphere import sphere

# A point halfway to the north pole and its density matrix
p = sphere.SphericalPoint(0.5, math.pi / 3, 0.4)
d = sphere.density_from_point(p)
print("D(0.5, pi/3, 0.4) =\n", np.round(d, 6))

# Back from the matrix to the ball
q = sphere.point_from_density(d)
print(f"recovered r={q.r:.6f} theta={q.theta:.6f} phi={q.phi:.6f}")

# Rays map to surface points
ray = sphere.ray_from_angles(sphere.Direction(math.pi / 2, 0.0))
print("ray along +x:", np.round(ray.amplitudes, 6), "-> point", np.round(ray.point().to_cartesian(), 6))

# Measure along the z axis without reading the result
n = sphere.Direction(0.0)
after = sphere.luder_single(d, n)
print("after measurement along z:", np.round(sphere.bloch_vector(after), 6))
print("projection of the point  :", np.round(sphere.project_onto_direction(p.to_cartesian(), n), 6))

# Outcome probabilities are (1 +/- p.n) / 2
print("Born probabilities along z:", sphere.born_probabilities(d, n))
