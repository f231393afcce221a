"""
Collapse and the sphere-to-sphere map
=====================================

Reading out spin 1 along a direction leaves spin 2 in a definite partner
state.  Following the partner as the direction runs over the sphere gives a
map of the sphere onto itself: the equator goes to a cone with cos(beta) = r,
lines through the center go to lines through the point (0, 0, r), and
antipodes stay antipodes only when r = 0.
"""

import math

import numpy as np

from entsphere import bipartite, measurement, sphere

r = 0.6
psi = bipartite.schmidt_state(r)

# Singlet: perfectly anticorrelated partners
for b in measurement.collapse_pair(bipartite.BipartiteState.singlet(), sphere.Direction(0.0)):
    print(f"singlet {b.branch}: p={b.probability:.3f} partner z={b.partner_point.to_cartesian()[2]:+.3f}")

# Equator -> cone
recs = measurement.map_sphere_grid(psi, sphere.equator_grid(16))
zs = [rec.partner_point.to_cartesian()[2] for rec in recs]
print(f"equator images, r={r}: polar cosines in [{min(zs):.12f}, {max(zs):.12f}]")

# Meridian -> stretched towards the north pole
print(" theta   cos(theta)   partner cos   (r + c)/(1 + r c)   probability")
for d in sphere.meridian_grid(9):
    rec = measurement.map_sphere_grid(psi, [d])[0]
    c = math.cos(d.theta)
    print(f"{d.theta:6.3f}  {c:+.6f}    {rec.partner_point.to_cartesian()[2]:+.6f}     "
          f"{(r + c) / (1 + r * c):+.6f}            {rec.probability:.6f}")

# A line through the center maps to a line through (0, 0, r)
d = sphere.Direction(1.1, 0.4)
a, b = measurement.map_sphere_grid(psi, [d, d.antipode()])
pa, pb = a.partner_point.to_cartesian(), b.partner_point.to_cartesian()
axis = np.array([0.0, 0.0, r])
print("distance of (0,0,r) to the image chord:",
      np.linalg.norm(np.cross(pa - axis, pb - axis)) / np.linalg.norm(pa - pb))

# Orthogonality defect of the images is (r/2) sin(theta)
for rr in (0.0, 0.3, 0.9):
    got = measurement.orthogonality_defect_via_constraint(rr, 1.1)
    print(f"r={rr}: defect {got:.12f}  (r/2) sin(theta) = {rr / 2 * math.sin(1.1):.12f}")
