"""
Schmidt form and the entanglement parameter
===========================================

Every two-spin pure state can be written as
sqrt((1+r)/2) x1 x2 + sqrt((1-r)/2) x1' x2' with orthonormal pairs.
r = 0 is maximal entanglement, r = 1 a product state.
"""

import math

import numpy as np

from entsphere import bipartite

states = {
    "singlet": bipartite.BipartiteState.singlet(),
    "product": bipartite.BipartiteState.product([1, 1j], [2, -1]),
    "lambda = [[4,1],[2,3]]/sqrt(30)": bipartite.BipartiteState(np.array([[4, 1], [2, 3]]) / math.sqrt(30)),
}
for name, psi in states.items():
    form = bipartite.schmidt_decompose(psi)
    back = bipartite.state_from_schmidt(form)
    print(f"{name:32s} r = {form.r:.12f}  reconstruction fidelity = {back.fidelity(psi):.15f}")

print("sqrt(5)/3 =", math.sqrt(5) / 3)

# Reduced densities have eigenvalues (1 +/- r)/2
psi = states["lambda = [[4,1],[2,3]]/sqrt(30)"]
r = bipartite.entanglement_parameter(psi)
print("eigenvalues of D1:", np.linalg.eigvalsh(bipartite.density_first(psi)), "expected", np.array([(1 - r) / 2, (1 + r) / 2]))

# Random states spread over the whole range of r
rng = np.random.default_rng(1)
rs = [bipartite.entanglement_parameter(bipartite.BipartiteState.random(rng)) for _ in range(2000)]
print("r for 2000 random states: histogram", np.histogram(rs, bins=5, range=(0, 1))[0])
