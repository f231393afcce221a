import math

import numpy as np
import pytest

from entsphere import sphere
from entsphere.bipartite import BipartiteState, random_unitary, schmidt_state


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


def random_cvec(rng, n=2):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def random_cmat(rng, n=2):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_point(rng) -> sphere.SphericalPoint:
    """Uniform in the unit ball."""
    v = rng.standard_normal(3)
    v *= rng.random() ** (1 / 3) / np.linalg.norm(v)
    return sphere.SphericalPoint.from_cartesian(v)


def random_density(rng) -> np.ndarray:
    return sphere.density_from_point(random_point(rng))


def engineered_state(rng, r) -> BipartiteState:
    """State with prescribed r in random Schmidt bases, presented in random
    declared bases."""
    psi = schmidt_state(r, random_unitary(rng), random_unitary(rng))
    return BipartiteState(psi.coefficients)


def brute_partial_trace_second(rho):
    out = np.zeros((2, 2), dtype=complex)
    for i in range(2):
        for k in range(2):
            out[i, k] = sum(rho[2 * i + j, 2 * k + j] for j in range(2))
    return out


def brute_partial_trace_first(rho):
    out = np.zeros((2, 2), dtype=complex)
    for j in range(2):
        for l in range(2):
            out[j, l] = sum(rho[2 * i + j, 2 * i + l] for i in range(2))
    return out


SQRT2 = math.sqrt(2.0)
