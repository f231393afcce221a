"""Sphere model of a single spin-1/2.

Ray states sit on the unit sphere, density states fill the closed unit ball,
and a Stern-Gerlach measurement in direction ``n`` acts on the ball as the
orthogonal projection onto the line spanned by ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DomainError, InvalidDensity

TWO_PI = 2.0 * math.pi

#: Radius (or transverse radius) below which angular coordinates are
#: undefined and set to their canonical value.
COORD_TOL = 1e-15

#: Slack allowed on ``r <= 1`` and on the angle ranges before rejecting.
RANGE_SLACK = 1e-9

RAY_EQUALITY_TOL = 1e-12


def _reduce_phi(phi: float) -> float:
    phi = math.fmod(float(phi), TWO_PI)
    if phi < 0.0:
        phi += TWO_PI
    if phi >= TWO_PI:  # fmod of values just below a multiple of 2*pi
        phi = 0.0
    return phi


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not (-RANGE_SLACK <= theta <= math.pi + RANGE_SLACK):
        raise DomainError(f"theta={theta} outside [0, pi]")
    return min(max(theta, 0.0), math.pi)


@dataclass(frozen=True)
class Direction:
    """Measurement axis ``u(1, theta, phi)``; ``phi`` is reduced into [0, 2*pi)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_theta(self.theta))
        object.__setattr__(self, "phi", _reduce_phi(self.phi))

    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def antipode(self) -> "Direction":
        return Direction(math.pi - self.theta, self.phi + math.pi)

    @classmethod
    def from_vector(cls, v) -> "Direction":
        p = SphericalPoint.from_cartesian(np.asarray(v, dtype=float) / np.linalg.norm(v))
        return cls(p.theta, p.phi)


@dataclass(frozen=True)
class SphericalPoint:
    """Point ``u(r, theta, phi)`` of the closed unit ball, in canonical form.

    At the center ``theta = phi = 0``; on the polar axis ``phi = 0``.
    """

    r: float
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        r = float(self.r)
        if not (0.0 <= r <= 1.0 + RANGE_SLACK):
            raise DomainError(f"r={r} outside [0, 1]")
        r = min(r, 1.0)
        theta = _check_theta(self.theta)
        phi = _reduce_phi(self.phi)
        if r <= COORD_TOL:
            r, theta, phi = 0.0, 0.0, 0.0
        elif theta == 0.0 or theta == math.pi:
            phi = 0.0
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def to_cartesian(self) -> np.ndarray:
        return self.r * Direction(self.theta, self.phi).unit_vector()

    def direction(self) -> Direction:
        return Direction(self.theta, self.phi)

    @classmethod
    def from_cartesian(cls, xyz) -> "SphericalPoint":
        x, y, z = (float(c) for c in xyz)
        rho = math.hypot(x, y)
        r = math.hypot(rho, z)
        if r <= COORD_TOL:
            return cls(0.0)
        theta = math.atan2(rho, z)
        phi = math.atan2(y, x) if rho > COORD_TOL else 0.0
        if r > 1.0 + RANGE_SLACK:
            raise DomainError(f"point {xyz} lies outside the unit ball")
        return cls(min(r, 1.0), theta, phi)

    def is_close(self, other: "SphericalPoint", tol: float = 1e-9) -> bool:
        """Compare coordinates, with ``phi`` taken modulo 2*pi."""
        dphi = abs(self.phi - other.phi)
        dphi = min(dphi, TWO_PI - dphi)
        return abs(self.r - other.r) <= tol and abs(self.theta - other.theta) <= tol and dphi <= tol


@dataclass(frozen=True, eq=False)
class RayState:
    """Unit vector of C^2, compared modulo global phase."""

    amplitudes: np.ndarray = field(repr=True)

    def __post_init__(self):
        v = linalg.vector2(self.amplitudes)
        if abs(linalg.norm(v) - 1.0) > RANGE_SLACK:
            raise DomainError("ray amplitudes must have unit norm")
        object.__setattr__(self, "amplitudes", v)

    @classmethod
    def from_vector(cls, v) -> "RayState":
        v = linalg.vector2(v)
        n = linalg.norm(v)
        if n == 0.0:
            raise DomainError("cannot normalize the zero vector")
        return cls(v / n)

    def __eq__(self, other):
        if not isinstance(other, RayState):
            return NotImplemented
        return abs(linalg.inner_product(self.amplitudes, other.amplitudes)) > 1.0 - RAY_EQUALITY_TOL

    __hash__ = None

    def density(self) -> np.ndarray:
        return linalg.outer(self.amplitudes)

    def point(self) -> SphericalPoint:
        return SphericalPoint.from_cartesian(bloch_vector(self.density()))


def ray_from_angles(d: Direction) -> RayState:
    """``|theta phi> = (cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{i phi/2})``."""
    half = 0.5 * d.theta
    w = np.exp(0.5j * d.phi)
    return RayState(np.array([math.cos(half) / w, math.sin(half) * w]))


def projector(d: Direction) -> np.ndarray:
    """Orthogonal projector on the ray ``|theta phi>``; equals ``D(1, theta, phi)``."""
    return density_from_point(SphericalPoint(1.0, d.theta, d.phi))


def density_from_bloch(xyz) -> np.ndarray:
    x, y, z = (float(c) for c in xyz)
    return 0.5 * np.array([[1.0 + z, x - 1j * y], [x + 1j * y, 1.0 - z]])


def density_from_point(p: SphericalPoint) -> np.ndarray:
    """``D(r, theta, phi) = 1/2 [[1 + r cos t, r sin t e^{-i phi}], [r sin t e^{i phi}, 1 - r cos t]]``."""
    rc = p.r * math.cos(p.theta)
    off = p.r * math.sin(p.theta) * np.exp(1j * p.phi)
    return 0.5 * np.array([[1.0 + rc, np.conj(off)], [off, 1.0 - rc]])


def check_density(d, tol: float = linalg.DEFAULT_TOL) -> np.ndarray:
    try:
        d = linalg.matrix2(d)
    except ValueError as exc:
        raise InvalidDensity(str(exc)) from exc
    if not linalg.is_hermitian(d, tol):
        raise InvalidDensity("density matrix is not Hermitian")
    if not linalg.is_trace_one(d, tol):
        raise InvalidDensity("density matrix does not have unit trace")
    if not linalg.is_psd(d, tol):
        raise InvalidDensity("density matrix is not positive semidefinite")
    return d


def bloch_vector(d) -> np.ndarray:
    """Cartesian point of a 2x2 density matrix (no validation)."""
    off = 0.5 * (d[1, 0] + np.conj(d[0, 1]))
    return np.array([2.0 * off.real, 2.0 * off.imag, (d[0, 0] - d[1, 1]).real])


def point_from_density(d, tol: float = linalg.DEFAULT_TOL) -> SphericalPoint:
    """Inverse of :func:`density_from_point`.

    The radius is the length of the Bloch vector, which equals
    ``sqrt(1 - 4 det d)`` but stays accurate near the center.
    """
    d = check_density(d, tol)
    return SphericalPoint.from_cartesian(bloch_vector(d))


def project_onto_direction(p, n: Direction) -> np.ndarray:
    """``(p . u) u`` for the unit vector ``u`` of ``n``."""
    u = n.unit_vector()
    return float(np.dot(np.asarray(p, dtype=float), u)) * u


def luder_single(d, n: Direction) -> np.ndarray:
    """Non-selective measurement: ``P d P + (1 - P) d (1 - P)``."""
    d = check_density(d)
    p = projector(n)
    q = np.eye(2) - p
    return p @ d @ p + q @ d @ q


def born_probabilities(d, n: Direction) -> tuple[float, float]:
    d = check_density(d)
    p_plus = float(np.trace(projector(n) @ d).real)
    p_plus = min(max(p_plus, 0.0), 1.0)
    return p_plus, 1.0 - p_plus


def little_sphere_locus(p, directions) -> list[np.ndarray]:
    """Post-measurement points of ``p`` for each direction.

    They all lie on the sphere whose diameter joins ``p`` and the origin.
    """
    return [project_onto_direction(p, n) for n in directions]


# -- direction grids ----------------------------------------------------------

def equator_grid(n: int = 64) -> list[Direction]:
    return [Direction(math.pi / 2, TWO_PI * k / n) for k in range(n)]


def meridian_grid(n: int = 65, phi: float = 0.0) -> list[Direction]:
    """``n`` polar angles from 0 to pi (inclusive) at fixed azimuth."""
    if n < 2:
        raise DomainError("meridian grid needs at least 2 points")
    return [Direction(math.pi * k / (n - 1), phi) for k in range(n)]


def fibonacci_grid(n: int) -> list[Direction]:
    """Near-uniform golden-spiral directions."""
    golden = math.pi * (3.0 - math.sqrt(5.0))
    out = []
    for k in range(n):
        z = 1.0 - (2.0 * k + 1.0) / n
        out.append(Direction(math.acos(z), golden * k))
    return out


def parse_grid(text: str) -> list[Direction]:
    """Parse ``equator[:N]``, ``meridian[:N]`` or ``fibonacci:N``."""
    name, _, count = text.partition(":")
    try:
        n = int(count) if count else None
    except ValueError:
        raise ValueError(f"bad grid size in {text!r}") from None
    if n is not None and n < 1:
        raise ValueError(f"grid size must be positive in {text!r}")
    if name == "equator":
        return equator_grid(n or 64)
    if name == "meridian":
        return meridian_grid(n or 65)
    if name == "fibonacci":
        if n is None:
            raise ValueError("fibonacci grid needs a size, e.g. fibonacci:100")
        return fibonacci_grid(n)
    raise ValueError(f"unknown grid {text!r}")


def random_direction(rng: np.random.Generator) -> Direction:
    return Direction.from_vector(rng.standard_normal(3))
