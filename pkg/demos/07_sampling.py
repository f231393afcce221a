"""
Sampling collapse outcomes
==========================

Repeated preparations and read-outs give branch counts that scatter around
the exact probabilities.  The generator is seeded, so a histogram can be
reproduced exactly.
"""

import math

from entsphere import bipartite, measurement, sphere

singlet = bipartite.BipartiteState.singlet()
n = sphere.Direction(1.2, 2.0)
shots = 100_000

for seed in (0, 1, 2):
    h = measurement.sample_collapse(singlet, n, shots=shots, seed=seed)
    print(f"seed {seed}: {h.counts}  frequency {h.frequencies()['plus']:.5f}")

sigma = math.sqrt(0.25 / shots)
print(f"4 sigma band around 1/2: +/- {4 * sigma:.5f}")

again = measurement.sample_collapse(singlet, n, shots=shots, seed=0)
print("seed 0 rerun:", again.counts, "generator", again.generator)

# A certain outcome: product state read out along its own ray
psi = bipartite.BipartiteState.product([1, 0], [0, 1])
print("product state along z:", measurement.sample_collapse(psi, sphere.Direction(0.0), shots=1000).counts)

# A partially entangled state along its Schmidt axis: probabilities (1 +/- r)/2
h = measurement.sample_collapse(bipartite.schmidt_state(0.5), sphere.Direction(0.0), shots=shots, seed=3)
print("r=0.5 along z:", h.frequencies(), "exact", h.probabilities)
