"""
Constraint functions between two spins
======================================

An entangled pure state fixes, for every vector of spin 1, a vector of
spin 2 (and back) through a conjugate-linear map.  Composing the two maps
gives the reduced density matrices.
"""

import math

import numpy as np

from entsphere import bipartite, linalg

lam = np.array([[4, 1], [2, 3]]) / math.sqrt(30)
psi = bipartite.BipartiteState(lam)

x = np.array([1.0, 1j]) / math.sqrt(2)
print("F12(x) =", np.round(bipartite.apply_F12(psi, x), 6))
print("F21(F12(x)) =", np.round(bipartite.apply_F21(psi, bipartite.apply_F12(psi, x)), 6))

# Conjugate linearity: scalars come out conjugated
a = 0.3 + 0.8j
lhs = bipartite.apply_F12(psi, a * x)
rhs = np.conj(a) * bipartite.apply_F12(psi, x)
print("F12(a x) - conj(a) F12(x):", np.abs(lhs - rhs).max())

# The compositions are the partial traces of |psi><psi|
c1, c2 = bipartite.compose_constraints(psi)
rho = psi.density()
print("F21 o F12 * 30 =\n", np.round(30 * c1, 10).real)
print("Tr_2 rho  * 30 =\n", np.round(30 * linalg.partial_trace_over_second(rho), 10).real)
print("F12 o F21 * 30 =\n", np.round(30 * c2, 10).real)
print("Tr_1 rho  * 30 =\n", np.round(30 * linalg.partial_trace_over_first(rho), 10).real)

# The maps do not depend on the bases used to write the state down
rng = np.random.default_rng(7)
moved = bipartite.rebase(psi, bipartite.random_unitary(rng), bipartite.random_unitary(rng))
print("coefficients in new bases:\n", np.round(moved.lam, 4))
print("F12(x) in new bases agrees:", np.allclose(bipartite.apply_F12(moved, x), bipartite.apply_F12(psi, x)))
