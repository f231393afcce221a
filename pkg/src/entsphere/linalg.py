"""Small-dimension complex linear algebra for one and two qubits.

Vectors are ``complex128`` arrays of shape ``(2,)``; operators are arrays of
shape ``(2, 2)`` or ``(4, 4)``.  Two-qubit operators use the basis ordering
``(e1^1 e2^1, e1^1 e2^2, e1^2 e2^1, e1^2 e2^2)``, i.e. row index ``2*i + k``
for first-factor index ``i`` and second-factor index ``k`` (``np.kron``
ordering).

The inner product is conjugate-linear in its *first* argument.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import NonHermitianInput

#: Absolute tolerance for the refinement predicates (Hermitian, trace one, PSD).
#: Override with the ``ENTSPHERE_TOL`` environment variable.
DEFAULT_TOL = float(os.environ.get("ENTSPHERE_TOL", "1e-9"))

#: Eigenvalue gap below which a 2x2 spectrum is treated as degenerate.
DEGENERACY_TOL = 1e-12

#: Magnitude below which a vector component counts as zero when fixing phase.
PHASE_TOL = 1e-12


def _as_array(x, shape, name):
    a = np.asarray(x, dtype=np.complex128)
    if a.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def vector2(x) -> np.ndarray:
    return _as_array(x, (2,), "vector")


def matrix2(m) -> np.ndarray:
    return _as_array(m, (2, 2), "2x2 matrix")


def matrix4(m) -> np.ndarray:
    return _as_array(m, (4, 4), "4x4 matrix")


# -- arithmetic -------------------------------------------------------------

def adjoint(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def inner_product(x: np.ndarray, y: np.ndarray) -> complex:
    """<x, y> = sum conj(x_k) y_k."""
    return complex(np.vdot(x, y))


def norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x))


def outer(x: np.ndarray, y: np.ndarray | None = None) -> np.ndarray:
    """|x><y| (``y`` defaults to ``x``)."""
    if y is None:
        y = x
    return np.outer(x, np.conj(y))


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; entry ``(2i+k, 2j+l)`` is ``a[i, j] * b[k, l]``."""
    return np.kron(a, b)


def partial_trace_over_second(rho: np.ndarray) -> np.ndarray:
    """Reduced operator on the first factor of a 4x4 operator."""
    return np.einsum("ijkj->ik", np.asarray(rho).reshape(2, 2, 2, 2))


def partial_trace_over_first(rho: np.ndarray) -> np.ndarray:
    """Reduced operator on the second factor of a 4x4 operator."""
    return np.einsum("ijil->jl", np.asarray(rho).reshape(2, 2, 2, 2))


# -- refinement predicates --------------------------------------------------

def is_hermitian(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.max(np.abs(m - adjoint(m))) <= tol)


def is_trace_one(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return bool(abs(np.trace(m) - 1.0) <= tol)


def is_psd(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Hermitian part has no eigenvalue below ``-tol``."""
    h = 0.5 * (m + adjoint(m))
    if h.shape == (2, 2):
        lo = eig_hermitian2(h).eigenvalue_lo
    else:
        lo = float(np.linalg.eigvalsh(h)[0])
    return lo >= -tol


def is_density(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return is_hermitian(m, tol) and is_trace_one(m, tol) and is_psd(m, tol)


# -- 2x2 Hermitian eigenproblem ---------------------------------------------

def canonicalize_phase(v: np.ndarray, tol: float = PHASE_TOL) -> np.ndarray:
    """Rotate the global phase so the first component is real and positive,
    or the second one if the first is (numerically) zero."""
    lead = v[0] if abs(v[0]) >= tol else v[1]
    if lead == 0:
        return np.array(v, dtype=np.complex128)
    return v * (abs(lead) / lead)


@dataclass(frozen=True)
class EigenPair2:
    eigenvalue_hi: float
    eigenvalue_lo: float
    eigvec_hi: np.ndarray
    eigvec_lo: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvalue_hi * outer(self.eigvec_hi)
                + self.eigenvalue_lo * outer(self.eigvec_lo))


def eig_hermitian2(m: np.ndarray, tol: float = DEFAULT_TOL) -> EigenPair2:
    """Closed-form eigendecomposition of a Hermitian 2x2 matrix.

    Writes ``m = c*I + x*sx + y*sy + z*sz``; the eigenvalues are
    ``c +/- |(x, y, z)|`` and the larger one belongs to the spin-up state
    along the direction of ``(x, y, z)``.  Eigenvectors are phase
    canonicalized; a degenerate spectrum returns the canonical basis.
    """
    m = matrix2(m)
    if not is_hermitian(m, tol):
        raise NonHermitianInput("matrix is not Hermitian within tolerance")
    a = m[0, 0].real
    d = m[1, 1].real
    b = 0.5 * (m[0, 1] + np.conj(m[1, 0]))
    c = 0.5 * (a + d)
    x, y, z = b.real, -b.imag, 0.5 * (a - d)
    h = float(np.sqrt(x * x + y * y + z * z))
    if 2.0 * h < DEGENERACY_TOL:
        e0 = np.array([1.0, 0.0], dtype=np.complex128)
        e1 = np.array([0.0, 1.0], dtype=np.complex128)
        return EigenPair2(c + h, c - h, e0, e1)
    theta = np.arctan2(np.hypot(x, y), z)
    phi = np.arctan2(y, x)
    ch, sh = np.cos(theta / 2), np.sin(theta / 2)
    turn = np.exp(1j * phi)
    v_hi = np.array([ch, sh * turn], dtype=np.complex128)
    v_lo = np.array([sh, -ch * turn], dtype=np.complex128)
    return EigenPair2(c + h, c - h, canonicalize_phase(v_hi), canonicalize_phase(v_lo))
