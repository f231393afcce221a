"""Measurements on one spin of an entangled pair.

Two update rules are provided:

* non-collapse (Lueders): the joint density becomes the mixture of both
  outcomes, ``(P x 1) rho (P x 1) + ((1-P) x 1) rho ((1-P) x 1)``;
* collapse (Von Neumann): the measured spin ends in the ray ``x`` and its
  partner in the normalized image of ``x`` under the constraint function.

The closed-form laws for the mapping of the first sphere onto the second
(norm, cone, stretching, orthogonality defect) are given both as formulas and
as numerical pipelines that start from the Hilbert-space state, so the two
can be compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from . import linalg
from .bipartite import BipartiteState, apply_F12, apply_F21, schmidt_decompose, schmidt_state
from .errors import DomainError, ZeroProbabilityBranch
from .sphere import Direction, RayState, SphericalPoint, projector, ray_from_angles

#: Branch probability below which the partner state is left undefined.
ZERO_PROBABILITY = 1e-14

Target = Union[Literal["first", "second"], int]


def _target(target: Target) -> str:
    if target in ("first", 1):
        return "first"
    if target in ("second", 2):
        return "second"
    raise ValueError(f"target must be 'first' or 'second', got {target!r}")


def _lift(p: np.ndarray, target: str) -> np.ndarray:
    eye = np.eye(2)
    return linalg.tensor(p, eye) if target == "first" else linalg.tensor(eye, p)


# -- non-collapse --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class NonCollapseResult:
    rho_after: np.ndarray
    d1_after: np.ndarray
    d2_after: np.ndarray


def luder_pair(psi: BipartiteState, n: Direction, target: Target = "first") -> NonCollapseResult:
    target = _target(target)
    rho = psi.density()
    p = _lift(projector(n), target)
    q = np.eye(4) - p
    rho_after = p @ rho @ p + q @ rho @ q
    return NonCollapseResult(
        rho_after,
        linalg.partial_trace_over_second(rho_after),
        linalg.partial_trace_over_first(rho_after),
    )


def luder_d1_schmidt(r: float, n: Direction) -> np.ndarray:
    """Reduced density of spin 1 after a non-collapse measurement along ``n``,
    for a state written in its Schmidt bases (closed form)."""
    c, s = math.cos(n.theta), math.sin(n.theta)
    off = r * s * c * np.exp(1j * n.phi)
    return 0.5 * np.array([[1.0 + r * c * c, np.conj(off)], [off, 1.0 - r * c * c]])


# -- collapse ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CollapseOutcome:
    """One branch of a collapse measurement.

    ``collapsed`` is the ray of the measured spin, ``partner`` the induced ray
    of the other spin.  For a branch of (numerically) zero probability the
    partner fields are ``None``.
    """

    branch: Literal["plus", "minus"]
    target: str
    probability: float
    collapsed: RayState
    partner: RayState | None = None
    partner_point: SphericalPoint | None = field(default=None)

    @property
    def is_null(self) -> bool:
        return self.partner is None

    def require_partner(self) -> RayState:
        if self.partner is None:
            raise ZeroProbabilityBranch(
                f"{self.branch} branch has probability {self.probability:.3g}; no partner state")
        return self.partner

    def product_density(self) -> np.ndarray:
        """Weighted density ``p |x (x) y><x (x) y|`` of this branch (zero if null)."""
        if self.partner is None:
            return np.zeros((4, 4), dtype=np.complex128)
        x, y = self.collapsed.amplitudes, self.partner.amplitudes
        v = np.kron(x, y) if self.target == "first" else np.kron(y, x)
        return self.probability * linalg.outer(v)


def _branch(psi, ray: RayState, branch: str, target: str) -> CollapseOutcome:
    image = apply_F12(psi, ray.amplitudes) if target == "first" else apply_F21(psi, ray.amplitudes)
    prob = float(np.vdot(image, image).real)
    if prob < ZERO_PROBABILITY:
        return CollapseOutcome(branch, target, prob, ray)
    partner = RayState.from_vector(image)
    return CollapseOutcome(branch, target, prob, ray, partner, partner.point())


def collapse_pair(psi: BipartiteState, n: Direction,
                  target: Target = "first") -> tuple[CollapseOutcome, CollapseOutcome]:
    """Both branches of a Stern-Gerlach collapse along ``n`` on one spin.

    The ``plus`` branch collapses onto ``ray_from_angles(n)``, ``minus`` onto
    the antipodal ray.  Probabilities are the squared norms of the images.
    """
    target = _target(target)
    plus = _branch(psi, ray_from_angles(n), "plus", target)
    minus = _branch(psi, ray_from_angles(n.antipode()), "minus", target)
    return plus, minus


# -- closed-form laws and their pipelines ----------------------------------------

def _check_r(r: float) -> float:
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r={r} outside [0, 1]")
    return float(r)


def _check_theta(theta: float, open_interval: bool = False) -> float:
    if open_interval:
        if not 0.0 < theta < math.pi:
            raise DomainError(f"theta={theta} outside (0, pi)")
    elif not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta={theta} outside [0, pi]")
    return float(theta)


def constraint_image_norm_sq(r: float, theta: float) -> float:
    """``||F12(psi)(z)||^2 = (1 + r cos theta) / 2`` for ``z`` at polar angle
    ``theta`` relative to the first Schmidt vector."""
    r, theta = _check_r(r), _check_theta(theta)
    return 0.5 * (1.0 + r * math.cos(theta))


def partner_polar_cosine(r: float, theta_v1: float) -> float:
    """Polar cosine of the partner point: ``(r + cos t) / (1 + r cos t)``.

    Undefined for ``r = 1, t = pi``, where the branch has zero probability.
    """
    r, theta_v1 = _check_r(r), _check_theta(theta_v1)
    c = math.cos(theta_v1)
    den = 1.0 + r * c
    if 0.5 * den < ZERO_PROBABILITY:
        raise DomainError("partner undefined: collapse branch has zero probability")
    return min(max((r + c) / den, -1.0), 1.0)


def orthogonality_defect(r: float, theta: float) -> float:
    """``|<F12(psi)(psi_u), F12(psi)(psi_-u)>| = (r/2) sin theta``."""
    r, theta = _check_r(r), _check_theta(theta, open_interval=True)
    return 0.5 * r * math.sin(theta)


def norm_sq_via_projection(r: float, theta: float, phi: float = 0.0) -> float:
    """``<psi|(P x 1)|psi>`` for the Schmidt-coordinate state of parameter ``r``."""
    psi = schmidt_state(_check_r(r))
    p = _lift(projector(Direction(theta, phi)), "first")
    return float(np.vdot(psi.vector, p @ psi.vector).real)


def partner_polar_cosine_via_collapse(r: float, theta_v1: float, phi_v1: float = 0.0) -> float:
    """Collapse, normalize, read the Bloch z-coordinate of the partner."""
    plus, _ = collapse_pair(schmidt_state(_check_r(r)), Direction(theta_v1, phi_v1))
    return float(plus.require_partner().point().to_cartesian()[2])


def orthogonality_defect_via_constraint(r: float, theta: float, phi: float = 0.0) -> float:
    psi = schmidt_state(_check_r(r))
    d = Direction(theta, phi)
    a = apply_F12(psi, ray_from_angles(d).amplitudes)
    b = apply_F12(psi, ray_from_angles(d.antipode()).amplitudes)
    return abs(linalg.inner_product(a, b))


# -- sphere-to-sphere map --------------------------------------------------------

@dataclass(frozen=True)
class MapRecord:
    direction: Direction
    partner_point: SphericalPoint | None
    probability: float


def map_sphere_grid(psi: BipartiteState, grid, frame: Literal["schmidt", "lab"] = "schmidt") -> list[MapRecord]:
    """Partner point of spin 2 for a collapse of spin 1 along each direction.

    In the ``schmidt`` frame, directions and partner points are expressed in
    the Schmidt bases of ``psi`` (north poles at ``x1_hi`` and ``x2_hi``);
    in the ``lab`` frame, in the canonical bases.  Zero-probability branches
    give ``partner_point=None``.
    """
    if frame == "schmidt":
        psi = schmidt_state(schmidt_decompose(psi).r)
    elif frame != "lab":
        raise ValueError(f"unknown frame {frame!r}")
    out = []
    for d in grid:
        plus, _ = collapse_pair(psi, d)
        out.append(MapRecord(d, plus.partner_point, plus.probability))
    return out


# -- sampling ----------------------------------------------------------------------

GENERATOR_NAME = "numpy.random.PCG64"


@dataclass(frozen=True)
class SampleHistogram:
    counts: dict
    probabilities: dict
    shots: int
    seed: int
    generator: str = GENERATOR_NAME

    def frequencies(self) -> dict:
        return {k: v / self.shots for k, v in self.counts.items()}


def sample_collapse(psi: BipartiteState, n: Direction, target: Target = "first",
                    shots: int = 1000, seed: int = 0) -> SampleHistogram:
    """Draw ``shots`` independent collapse outcomes.

    Single stream from ``numpy.random.default_rng(seed)``; the plus count is
    one binomial draw, so the histogram is reproducible for a fixed seed.
    """
    if shots < 1:
        raise DomainError("shots must be at least 1")
    plus, minus = collapse_pair(psi, n, target)
    p_plus = min(max(plus.probability / (plus.probability + minus.probability), 0.0), 1.0)
    rng = np.random.default_rng(seed)
    k = int(rng.binomial(shots, p_plus))
    return SampleHistogram(
        counts={"plus": k, "minus": shots - k},
        probabilities={"plus": plus.probability, "minus": minus.probability},
        shots=int(shots),
        seed=int(seed),
    )
