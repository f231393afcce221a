"""State documents (JSON) and point-cloud files (CSV).

A state document looks like::

    {"format_version": 1,
     "label": "singlet",
     "amplitudes": [[0, 0], [0.7071067811865476, 0], [-0.7071067811865476, 0], [0, 0]]}

with ``amplitudes`` in the order (e1^1 e2^1, e1^1 e2^2, e1^2 e2^1, e1^2 e2^2),
or a ``lambda`` entry holding the 2x2 coefficient matrix instead.  Complex
numbers are ``[re, im]`` pairs.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass

import numpy as np

from .bipartite import BipartiteState
from .errors import InvalidState, ParseError

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
SILENT_NORM_TOL = 1e-9
MAX_NORM_TOL = 1e-6

POINT_CLOUD_HEADER = ["theta_in", "phi_in", "r_out", "theta_out", "phi_out", "x", "y", "z", "probability"]


def _complex(v, where: str) -> complex:
    if (not isinstance(v, (list, tuple)) or len(v) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)):
        raise ParseError(f"{where}: expected a [re, im] pair, got {v!r}")
    z = complex(float(v[0]), float(v[1]))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"{where}: non-finite complex number")
    return z


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


@dataclass
class StateDocument:
    state: BipartiteState
    label: str | None = None
    format_version: int = FORMAT_VERSION


def parse_state(data: dict) -> StateDocument:
    if not isinstance(data, dict):
        raise ParseError("state document must be a JSON object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    has_amp, has_lam = "amplitudes" in data, "lambda" in data
    if has_amp == has_lam:
        raise ParseError("exactly one of 'amplitudes' or 'lambda' is required")
    if has_amp:
        amp = data["amplitudes"]
        if not isinstance(amp, list) or len(amp) != 4:
            raise ParseError("'amplitudes' must hold 4 complex pairs")
        coeffs = np.array([_complex(v, f"amplitudes[{k}]") for k, v in enumerate(amp)]).reshape(2, 2)
    else:
        lam = data["lambda"]
        if not isinstance(lam, list) or len(lam) != 2 or not all(isinstance(row, list) and len(row) == 2 for row in lam):
            raise ParseError("'lambda' must be a 2x2 matrix of complex pairs")
        coeffs = np.array([[_complex(v, f"lambda[{i}][{j}]") for j, v in enumerate(row)]
                           for i, row in enumerate(lam)])
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("'label' must be a string")

    nrm = float(np.linalg.norm(coeffs))
    dev = abs(nrm - 1.0)
    if dev > MAX_NORM_TOL:
        raise InvalidState(f"state norm {nrm!r} deviates from 1 by more than {MAX_NORM_TOL}")
    if dev > SILENT_NORM_TOL:
        log.warning("renormalizing state (norm deviation %.3g)", dev)
        coeffs = coeffs / nrm
    return StateDocument(BipartiteState(coeffs), label, version)


def loads_state(text: str) -> StateDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return parse_state(data)


def load_state(path) -> StateDocument:
    with open(path, encoding="utf-8") as fh:
        return loads_state(fh.read())


def state_to_dict(state: BipartiteState, label: str | None = None, use_lambda: bool = False) -> dict:
    c = state.coefficients
    out = {"format_version": FORMAT_VERSION}
    if label is not None:
        out["label"] = label
    if use_lambda:
        out["lambda"] = [[_pair(z) for z in row] for row in c]
    else:
        out["amplitudes"] = [_pair(z) for z in c.reshape(4)]
    return out


def dumps_state(state: BipartiteState, label: str | None = None, use_lambda: bool = False) -> str:
    return json.dumps(state_to_dict(state, label, use_lambda), indent=2)


# -- point clouds ----------------------------------------------------------------

@dataclass(frozen=True)
class PointCloudRecord:
    theta_in: float
    phi_in: float
    r_out: float
    theta_out: float
    phi_out: float
    x: float
    y: float
    z: float
    probability: float

    @classmethod
    def from_point(cls, direction, point, probability: float) -> "PointCloudRecord":
        """``point`` is a SphericalPoint or ``None`` (undefined output)."""
        if point is None:
            nan = float("nan")
            return cls(direction.theta, direction.phi, nan, nan, nan, nan, nan, nan, probability)
        x, y, z = point.to_cartesian()
        return cls(direction.theta, direction.phi, point.r, point.theta, point.phi,
                   float(x), float(y), float(z), float(probability))

    def is_consistent(self, tol: float = 1e-9) -> bool:
        """Spherical and Cartesian output coordinates describe the same point."""
        if math.isnan(self.r_out):
            return all(math.isnan(v) for v in (self.x, self.y, self.z))
        st = math.sin(self.theta_out)
        expect = (self.r_out * st * math.cos(self.phi_out), self.r_out * st * math.sin(self.phi_out),
                  self.r_out * math.cos(self.theta_out))
        return all(abs(a - b) <= tol for a, b in zip(expect, (self.x, self.y, self.z)))

    def values(self) -> list[float]:
        return [getattr(self, name) for name in POINT_CLOUD_HEADER]


def format_point_cloud(records, summary: dict | None = None) -> str:
    """CSV text with 17 significant digits; ``summary`` goes in trailing
    ``#``-comment lines."""
    buf = io.StringIO()
    buf.write(",".join(POINT_CLOUD_HEADER) + "\n")
    for rec in records:
        buf.write(",".join(f"{v:.17g}" for v in rec.values()) + "\n")
    for key, value in (summary or {}).items():
        buf.write(f"# {key},{value:.17g}\n" if isinstance(value, float) else f"# {key},{value}\n")
    return buf.getvalue()


def parse_point_cloud(text: str) -> list[PointCloudRecord]:
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader, None)
    if header != POINT_CLOUD_HEADER:
        raise ParseError(f"unexpected point-cloud header {header!r}")
    return [PointCloudRecord(*(float(v) for v in row)) for row in reader]
