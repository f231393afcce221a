"""Pure states of two spins, their constraint functions and Schmidt form.

A state ``psi = sum_ij lam[i, j] b1_i (x) b2_j`` is stored as the coefficient
matrix ``lam`` together with the two orthonormal bases (columns of the
``basis1`` / ``basis2`` matrices).  Everything returned to callers (images of
the constraint functions, reduced densities, Schmidt vectors) is expressed in
canonical coordinates, so results do not depend on the declared bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import linalg
from .errors import InvalidBasis, InvalidSchmidtForm, InvalidState

NORM_TOL = 1e-9
BASIS_TOL = 1e-9
#: ``1 - r`` below which the second Schmidt vector of spin 2 is completed by
#: orthogonality instead of through the constraint function.
PRODUCT_TOL = 1e-9

_I2 = np.eye(2, dtype=np.complex128)


def _check_basis(b, name: str = "basis") -> np.ndarray:
    if b is None:
        return _I2
    try:
        if isinstance(b, (list, tuple)) and len(b) == 2:
            b = np.column_stack([linalg.vector2(b[0]), linalg.vector2(b[1])])
        b = linalg.matrix2(b)
    except ValueError as exc:
        raise InvalidBasis(f"{name}: {exc}") from exc
    if np.max(np.abs(linalg.adjoint(b) @ b - _I2)) > BASIS_TOL:
        raise InvalidBasis(f"{name} is not orthonormal")
    return b


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Unit vector of C^2 (x) C^2.

    ``lam[i, j]`` is the coefficient of ``basis1[:, i] (x) basis2[:, j]``.
    """

    lam: np.ndarray
    basis1: np.ndarray = None
    basis2: np.ndarray = None

    def __post_init__(self):
        try:
            lam = linalg.matrix2(self.lam)
        except ValueError as exc:
            raise InvalidState(str(exc)) from exc
        if abs(np.linalg.norm(lam) - 1.0) > NORM_TOL:
            raise InvalidState(f"state norm {np.linalg.norm(lam)!r} differs from 1")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "basis1", _check_basis(self.basis1, "basis1"))
        object.__setattr__(self, "basis2", _check_basis(self.basis2, "basis2"))

    # -- constructors --

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "BipartiteState":
        """Amplitudes in the order (e1^1 e2^1, e1^1 e2^2, e1^2 e2^1, e1^2 e2^2)."""
        a = np.asarray(amplitudes, dtype=np.complex128)
        if a.shape != (4,):
            raise InvalidState("expected 4 amplitudes")
        return cls(a.reshape(2, 2))

    @classmethod
    def product(cls, x, y) -> "BipartiteState":
        x = np.asarray(x, dtype=np.complex128)
        y = np.asarray(y, dtype=np.complex128)
        return cls(np.outer(x / np.linalg.norm(x), y / np.linalg.norm(y)))

    @classmethod
    def singlet(cls) -> "BipartiteState":
        s = 1.0 / math.sqrt(2.0)
        return cls(np.array([[0.0, s], [-s, 0.0]]))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "BipartiteState":
        """Uniformly distributed on the unit sphere of C^4."""
        z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        return cls.from_amplitudes(z / np.linalg.norm(z))

    # -- views --

    @property
    def coefficients(self) -> np.ndarray:
        """Coefficient matrix in the canonical product basis."""
        return self.basis1 @ self.lam @ self.basis2.T

    @property
    def vector(self) -> np.ndarray:
        return self.coefficients.reshape(4)

    def density(self) -> np.ndarray:
        """``|psi><psi|`` as a 4x4 matrix."""
        return linalg.outer(self.vector)

    def fidelity(self, other: "BipartiteState") -> float:
        """``|<self, other>|``; equals 1 for the same ray."""
        return abs(linalg.inner_product(self.vector, other.vector))

    def with_canonical_phase(self) -> "BipartiteState":
        """Same ray, global phase chosen so the largest canonical coefficient
        is real and positive.  Result uses canonical bases."""
        c = self.coefficients
        lead = c.flat[int(np.argmax(np.abs(c)))]
        return BipartiteState(c * (abs(lead) / lead))


# -- constraint functions -----------------------------------------------------

Orientation = Literal["one_to_two", "two_to_one"]


def apply_F12(psi: BipartiteState, x1) -> np.ndarray:
    """``x1 -> sum_ij lam_ij <x1, e1^i> e2^j`` (conjugate linear)."""
    return psi.coefficients.T @ np.conj(linalg.vector2(x1))


def apply_F21(psi: BipartiteState, x2) -> np.ndarray:
    """``x2 -> sum_ij lam_ij <x2, e2^j> e1^i`` (conjugate linear)."""
    return psi.coefficients @ np.conj(linalg.vector2(x2))


@dataclass(frozen=True, eq=False)
class ConstraintMap:
    """A constraint function kept as its coefficient matrix.

    The map is conjugate linear, so it is *not* matrix multiplication by
    ``lam``; calling the object applies the conjugation explicitly.
    """

    lam: np.ndarray
    orientation: Orientation = "one_to_two"

    def __call__(self, x) -> np.ndarray:
        m = self.lam.T if self.orientation == "one_to_two" else self.lam
        return m @ np.conj(linalg.vector2(x))

    def then(self, other: "ConstraintMap") -> np.ndarray:
        """Matrix of the (linear) composition ``other o self``."""
        cols = [other(self(e)) for e in _I2]
        return np.column_stack(cols)


def constraint_maps(psi: BipartiteState) -> tuple[ConstraintMap, ConstraintMap]:
    c = psi.coefficients
    return ConstraintMap(c, "one_to_two"), ConstraintMap(c, "two_to_one")


def density_first(psi: BipartiteState) -> np.ndarray:
    """Reduced density on spin 1: ``sum lam_ij conj(lam_kj) |e1^i><e1^k|``."""
    c = psi.coefficients
    return c @ linalg.adjoint(c)


def density_second(psi: BipartiteState) -> np.ndarray:
    """Reduced density on spin 2: ``sum lam_ij conj(lam_il) |e2^j><e2^l|``."""
    c = psi.coefficients
    return c.T @ np.conj(c)


def compose_constraints(psi: BipartiteState) -> tuple[np.ndarray, np.ndarray]:
    """Operators ``F21 o F12`` and ``F12 o F21``, assembled column by column."""
    f12, f21 = constraint_maps(psi)
    return f12.then(f21), f21.then(f12)


# -- Schmidt form -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """``psi = sqrt((1+r)/2) x1_hi (x) x2_hi + sqrt((1-r)/2) x1_lo (x) x2_lo``."""

    r: float
    x1_hi: np.ndarray
    x1_lo: np.ndarray
    x2_hi: np.ndarray
    x2_lo: np.ndarray

    @property
    def weights(self) -> tuple[float, float]:
        return math.sqrt((1.0 + self.r) / 2.0), math.sqrt((1.0 - self.r) / 2.0)

    @property
    def basis1(self) -> np.ndarray:
        return np.column_stack([self.x1_hi, self.x1_lo])

    @property
    def basis2(self) -> np.ndarray:
        return np.column_stack([self.x2_hi, self.x2_lo])


def _orthogonal_complement(v: np.ndarray) -> np.ndarray:
    return linalg.canonicalize_phase(np.array([-np.conj(v[1]), np.conj(v[0])]))


def schmidt_decompose(psi: BipartiteState) -> SchmidtForm:
    """Schmidt vectors from the eigenvectors of ``D1`` and the constraint
    function; ``r`` is the eigenvalue gap of ``D1``.

    ``x2 = F12(psi)(x1) / sqrt(mu)`` with ``mu = (1 +/- r)/2`` the matching
    eigenvalue of ``D1``.
    """
    eig = linalg.eig_hermitian2(density_first(psi))
    mu_hi = eig.eigenvalue_hi
    # det D1 = |det lam|^2 keeps the small eigenvalue accurate near products
    c = psi.coefficients
    mu_lo = abs(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]) ** 2 / mu_hi
    r = min(max(mu_hi - mu_lo, 0.0), 1.0)
    x1_hi, x1_lo = eig.eigvec_hi, eig.eigvec_lo
    x2_hi = apply_F12(psi, x1_hi) / math.sqrt(mu_hi)
    if 1.0 - r < PRODUCT_TOL:
        x2_lo = _orthogonal_complement(x2_hi / np.linalg.norm(x2_hi))
    else:
        x2_lo = apply_F12(psi, x1_lo) / math.sqrt(mu_lo)
    return SchmidtForm(r, x1_hi, x1_lo, x2_hi, x2_lo)


def entanglement_parameter(psi: BipartiteState) -> float:
    """``r`` in [0, 1]: 0 for maximally entangled states, 1 for products."""
    return schmidt_decompose(psi).r


def state_from_schmidt(form: SchmidtForm) -> BipartiteState:
    if not (-NORM_TOL <= form.r <= 1.0 + NORM_TOL):
        raise InvalidSchmidtForm(f"r={form.r} outside [0, 1]")
    try:
        b1 = _check_basis(form.basis1, "first Schmidt basis")
        b2 = _check_basis(form.basis2, "second Schmidt basis")
    except InvalidBasis as exc:
        raise InvalidSchmidtForm(str(exc)) from exc
    r = min(max(form.r, 0.0), 1.0)
    w_hi, w_lo = math.sqrt((1.0 + r) / 2.0), math.sqrt((1.0 - r) / 2.0)
    return BipartiteState(np.diag([w_hi, w_lo]).astype(np.complex128), b1, b2)


def schmidt_state(r: float, u1=None, u2=None) -> BipartiteState:
    """State with entanglement ``r``; Schmidt vectors are the columns of
    ``u1``/``u2`` (canonical basis by default)."""
    u1 = _I2 if u1 is None else np.asarray(u1)
    u2 = _I2 if u2 is None else np.asarray(u2)
    return state_from_schmidt(SchmidtForm(r, u1[:, 0], u1[:, 1], u2[:, 0], u2[:, 1]))


def rebase(psi: BipartiteState, new_basis1, new_basis2) -> BipartiteState:
    """Same vector, coefficients re-expressed in the new bases."""
    b1 = _check_basis(new_basis1, "new_basis1")
    b2 = _check_basis(new_basis2, "new_basis2")
    lam = linalg.adjoint(b1) @ psi.coefficients @ np.conj(b2)
    return BipartiteState(lam, b1, b2)


def random_unitary(rng: np.random.Generator, n: int = 2) -> np.ndarray:
    """Haar-random unitary via phase-corrected QR."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
