"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain or validation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

import numpy as np

from . import bipartite, measurement, sphere
from .errors import EntSphereError, ParseError
from .io import PointCloudRecord, format_point_cloud, loads_state

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 2, 3

log = logging.getLogger("entsphere")


# -- formatting helpers -----------------------------------------------------------

def _c(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _cvec(v) -> list:
    return [_c(z) for z in np.asarray(v).ravel()]


def _cmat(m) -> list:
    return [[_c(z) for z in row] for row in np.asarray(m)]


def _fmt_c(z: complex) -> str:
    re, im = float(np.real(z)), float(np.imag(z))
    if abs(re) < 5e-16:
        re = 0.0
    if abs(im) < 5e-16:
        im = 0.0
    return f"{re:+.12g}{im:+.12g}j"


def _fmt_mat(m, indent: str = "    ") -> str:
    return "\n".join(indent + "[" + ", ".join(_fmt_c(z) for z in row) + "]" for row in np.asarray(m))


def _fmt_vec(v) -> str:
    return "(" + ", ".join(_fmt_c(z) for z in v) + ")"


def _point(p: sphere.SphericalPoint | None) -> dict | None:
    if p is None:
        return None
    x, y, z = p.to_cartesian()
    return {"r": p.r, "theta": p.theta, "phi": p.phi, "x": float(x), "y": float(y), "z": float(z)}


def _fmt_point(p: sphere.SphericalPoint | None) -> str:
    if p is None:
        return "undefined (zero-probability branch)"
    x, y, z = p.to_cartesian()
    return (f"r={p.r:.12g} theta={p.theta:.12g} phi={p.phi:.12g} "
            f"(x={x:.12g}, y={y:.12g}, z={z:.12g})")


# -- input ------------------------------------------------------------------------

def _read_state(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_state(text).state


def _angle(args, value: float) -> float:
    return math.radians(value) if args.degrees else value


def _direction(args) -> sphere.Direction:
    return sphere.Direction(_angle(args, args.theta), _angle(args, args.phi))


def _grid(text: str):
    try:
        return sphere.parse_grid(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, payload: dict, text: str) -> None:
    _emit(args, json.dumps(payload, indent=2) + "\n" if args.json else text)


# -- commands -----------------------------------------------------------------------

def cmd_schmidt(args) -> int:
    psi = _read_state(args.state)
    form = bipartite.schmidt_decompose(psi)
    d1, d2 = bipartite.density_first(psi), bipartite.density_second(psi)
    fidelity = bipartite.state_from_schmidt(form).fidelity(psi)
    payload = {
        "r": form.r,
        "x1_hi": _cvec(form.x1_hi), "x1_lo": _cvec(form.x1_lo),
        "x2_hi": _cvec(form.x2_hi), "x2_lo": _cvec(form.x2_lo),
        "d1": _cmat(d1), "d2": _cmat(d2),
        "fidelity": fidelity,
    }
    text = (
        f"r = {form.r:.15g}\n"
        f"x1_hi = {_fmt_vec(form.x1_hi)}\nx1_lo = {_fmt_vec(form.x1_lo)}\n"
        f"x2_hi = {_fmt_vec(form.x2_hi)}\nx2_lo = {_fmt_vec(form.x2_lo)}\n"
        f"D1 =\n{_fmt_mat(d1)}\nD2 =\n{_fmt_mat(d2)}\n"
        f"reconstruction fidelity = {fidelity:.15g}\n"
    )
    _emit_report(args, payload, text)
    return EXIT_OK


def cmd_measure(args) -> int:
    psi = _read_state(args.state)
    n = _direction(args)
    target = "first" if args.target == 1 else "second"
    if args.mode == "luder":
        res = measurement.luder_pair(psi, n, target)
        if target == "first":
            other_before, other_after = bipartite.density_second(psi), res.d2_after
        else:
            other_before, other_after = bipartite.density_first(psi), res.d1_after
        change = float(np.max(np.abs(other_after - other_before)))
        payload = {"mode": "luder", "target": args.target, "theta": n.theta, "phi": n.phi,
                   "rho_after": _cmat(res.rho_after), "d1_after": _cmat(res.d1_after),
                   "d2_after": _cmat(res.d2_after), "unmeasured_density_change": change}
        text = (f"rho' =\n{_fmt_mat(res.rho_after)}\nD1' =\n{_fmt_mat(res.d1_after)}\n"
                f"D2' =\n{_fmt_mat(res.d2_after)}\n"
                f"max change of unmeasured spin density = {change:.3g}\n")
    else:
        branches = measurement.collapse_pair(psi, n, target)
        payload = {"mode": "collapse", "target": args.target, "theta": n.theta, "phi": n.phi,
                   "branches": [{"branch": b.branch, "probability": b.probability,
                                 "collapsed_point": _point(b.collapsed.point()),
                                 "partner_point": _point(b.partner_point)} for b in branches]}
        lines = []
        for b in branches:
            lines.append(f"{b.branch}: probability={b.probability:.15g}\n"
                         f"  collapsed: {_fmt_point(b.collapsed.point())}\n"
                         f"  partner:   {_fmt_point(b.partner_point)}")
        text = "\n".join(lines) + "\n"
    _emit_report(args, payload, text)
    return EXIT_OK


def cmd_map(args) -> int:
    psi = _read_state(args.state)
    grid = _grid(args.grid)
    records = measurement.map_sphere_grid(psi, grid, frame=args.frame)
    rows = [PointCloudRecord.from_point(m.direction, m.partner_point, m.probability) for m in records]
    summary = {}
    if args.grid.split(":")[0] == "equator":
        cosines = [math.cos(row.theta_out) for row in rows if not math.isnan(row.theta_out)]
        summary["cone_cosine"] = float(np.mean(cosines)) if cosines else float("nan")
    if args.frame == "schmidt":
        summary["r"] = bipartite.entanglement_parameter(psi)
    _emit(args, format_point_cloud(rows, summary))
    return EXIT_OK


def cmd_sample(args) -> int:
    psi = _read_state(args.state)
    hist = measurement.sample_collapse(psi, _direction(args), "first" if args.target == 1 else "second",
                                       shots=args.shots, seed=args.seed)
    freq = hist.frequencies()
    payload = {"counts": hist.counts, "frequencies": freq, "probabilities": hist.probabilities,
               "shots": hist.shots, "seed": hist.seed, "generator": hist.generator}
    text = "".join(f"{k}: count={hist.counts[k]} frequency={freq[k]:.6f} probability={hist.probabilities[k]:.12g}\n"
                   for k in ("plus", "minus"))
    text += f"shots={hist.shots} seed={hist.seed} generator={hist.generator}\n"
    _emit_report(args, payload, text)
    return EXIT_OK


def cmd_littlesphere(args) -> int:
    state = sphere.SphericalPoint(args.r, _angle(args, args.theta), _angle(args, args.phi))
    p = state.to_cartesian()
    d = sphere.density_from_point(state)
    grid = _grid(args.grid)
    rows = []
    for n, out in zip(grid, sphere.little_sphere_locus(p, grid)):
        if abs(np.linalg.norm(out - p / 2) - np.linalg.norm(p) / 2) > 1e-9:
            raise EntSphereError(f"projected point {out} is off the little sphere")
        rows.append(PointCloudRecord.from_point(n, sphere.SphericalPoint.from_cartesian(out),
                                                sphere.born_probabilities(d, n)[0]))
    _emit(args, format_point_cloud(rows))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--degrees", action="store_true", help="angles are given in degrees")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="entsphere", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_state(p):
        p.add_argument("state", nargs="?", default="-", help="state document (JSON); '-' reads stdin")
        return p

    def with_direction(p):
        p.add_argument("--theta", type=float, required=True)
        p.add_argument("--phi", type=float, default=0.0)
        p.add_argument("--target", type=int, choices=(1, 2), default=1)
        return p

    p = with_state(sub.add_parser("schmidt", parents=[common], help="Schmidt form and r"))
    p.set_defaults(func=cmd_schmidt)

    p = with_direction(with_state(sub.add_parser("measure", parents=[common], help="measure one spin")))
    p.add_argument("--mode", choices=("luder", "collapse"), default="luder")
    p.set_defaults(func=cmd_measure)

    p = with_state(sub.add_parser("map", parents=[common], help="sphere-to-sphere point cloud"))
    p.add_argument("--grid", default="equator")
    p.add_argument("--frame", choices=("schmidt", "lab"), default="schmidt")
    p.set_defaults(func=cmd_map)

    p = with_direction(with_state(sub.add_parser("sample", parents=[common], help="sample collapse outcomes")))
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("littlesphere", parents=[common], help="post-measurement points of one spin")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--grid", default="fibonacci:100")
    p.set_defaults(func=cmd_littlesphere)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (EntSphereError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
