"""Command-line front end for projkit.

Subcommands: invariants, classify, distance, area, convert, sweep, bulge.
All numeric output is printed with 17 significant digits in a fixed field
order, so identical inputs produce byte-identical output.  Domain errors exit
with code 1 and a machine-readable error name on stderr; malformed input
exits with code 2.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import coords, hilbert, invariants, isometry
from .errors import ProjKitError
from .rp2 import Flag

_ENV_TOL = "PROJKIT_TOL"


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _json_text(obj) -> str:
    """Serialize with fixed float formatting (17 significant digits)."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_json_text(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_text(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return json.dumps(obj)
    return _fmt(obj)


def _emit_record(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(_json_text(record) + "\n")
        return
    for key, value in record.items():
        if isinstance(value, (list, tuple)):
            text = " ".join(_fmt(v) if isinstance(v, float) else str(v) for v in value)
        elif isinstance(value, float):
            text = _fmt(value)
        else:
            text = str(value)
        if fmt == "csv":
            out.write(f"{key},{text}\n")
        else:
            out.write(f"{key} = {text}\n")


def _load_input(source: str):
    if source is None:
        raise ValueError("missing --input")
    text = source
    if source == "-":
        text = sys.stdin.read()
    elif not source.lstrip().startswith(("{", "[")):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _default_tol(args, fallback: float) -> float:
    tol = args.tol
    if tol is None:
        env = os.environ.get(_ENV_TOL)
        tol = float(env) if env else fallback
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return tol


def _parse_domain(data: dict) -> hilbert.ConvexDomain:
    if "polygon" in data:
        return hilbert.Polygon(data["polygon"])
    if "conic" in data:
        return hilbert.ConicOval(data["conic"])
    raise ValueError("domain must carry a 'polygon' or 'conic' entry")


def _parse_boundary(data: dict) -> coords.BoundaryData:
    kind = data["kind"].replace("-", "_")
    if kind == coords.PARABOLIC:
        return coords.BoundaryData.parabolic()
    lam = float(data["lambda"])
    if kind == coords.QUASI_HYPERBOLIC:
        tau = float(data["tau"]) if "tau" in data else 2.0 / math.sqrt(lam)
        return coords.BoundaryData(lam, tau, kind)
    return coords.BoundaryData(lam, float(data["tau"]), kind)


def _cmd_invariants(args, out) -> int:
    tol = _default_tol(args, 1e-12)
    flags = [Flag.from_json(item) for item in _load_input(args.input)]
    if len(flags) == 3:
        t = invariants.triple_ratio(*flags, tol=tol).value
        record = {"T": t, "tau111": invariants.tau111(*flags, tol=tol)}
    elif len(flags) == 4:
        d = invariants.double_ratios(*flags, tol=tol)
        record = {
            "D1": d.d1,
            "D2": d.d2,
            "sigma1": invariants.shear(*flags, 1, tol=tol),
            "sigma2": invariants.shear(*flags, 2, tol=tol),
        }
    else:
        raise ValueError("expected a JSON array of 3 or 4 flags")
    _emit_record(record, args.format, out)
    return 0


def _cmd_classify(args, out) -> int:
    tol = _default_tol(args, isometry.DEFAULT_CLASSIFY_TOL)
    entries = _load_input(args.input)
    m = np.asarray(entries, dtype=float)
    if m.size != 9:
        raise ValueError("expected a row-major array of 9 numbers")
    c = isometry.classify(m.reshape(3, 3), tol=tol)
    record = {"kind": c.kind}
    if c.kind == isometry.HYPERBOLIC:
        record["eigenvalues"] = [float(v) for v in c.eigenvalues]
    elif c.kind == isometry.QUASI_HYPERBOLIC:
        record["mu"] = c.mu
        record["nu"] = c.nu
        record["jordan_at_larger"] = c.jordan_at_larger
    elif c.kind == isometry.OTHER and c.eigenvalues is not None:
        record["eigenvalues"] = [
            [float(np.real(v)), float(np.imag(v))] for v in c.eigenvalues
        ]
    _emit_record(record, args.format, out)
    return 0


def _cmd_distance(args, out) -> int:
    data = _load_input(args.input)
    dom = _parse_domain(data["domain"])
    d = hilbert.hilbert_distance(dom, data["x"], data["y"])
    _emit_record({"distance": d}, args.format, out)
    return 0


def _cmd_area(args, out) -> int:
    alphas = [float(a) for a in args.alphas.split(",") if a]
    out.write(
        "# config: area alphas={} truncation={} cellsize={} samples={} parallel={}\n".format(
            args.alphas, _fmt(args.truncation), _fmt(args.cellsize), args.samples,
            args.parallel,
        )
    )
    out.write("alpha,truncation,cellsize,area\n")
    for alpha in alphas:
        area = hilbert.triangle_area_experiment(
            alpha,
            args.truncation,
            args.cellsize,
            samples=args.samples,
            parallel=args.parallel,
        )
        out.write(
            f"{_fmt(alpha)},{_fmt(args.truncation)},{_fmt(args.cellsize)},{_fmt(area)}\n"
        )
    return 0


def _parse_goldman(data: dict):
    surface = data["surface"]
    boundaries = [_parse_boundary(b) for b in data["boundaries"]]
    if surface == "pants":
        if len(boundaries) != 3:
            raise ValueError("pants records need 3 boundary entries")
        return coords.PantsGoldman(tuple(boundaries), float(data["s"]), float(data["t"]))
    if surface == "torus":
        if len(boundaries) != 2:
            raise ValueError("torus records need 2 boundary entries (B then C)")
        return coords.TorusGoldman(
            boundaries[0],
            boundaries[1],
            float(data["s"]),
            float(data["t"]),
            float(data.get("u", 0.0)),
            float(data.get("v", 0.0)),
        )
    raise ValueError("surface must be 'pants' or 'torus'")


def _bd_record(surface: str, bd) -> dict:
    if surface == "pants":
        pants = bd
        record = {"surface": "pants"}
    else:
        pants = bd.pants
        record = {"surface": "torus"}
    record.update(
        {
            "sigma1": list(pants.sigma1),
            "sigma2": list(pants.sigma2),
            "tplus": pants.tplus,
            "tminus": pants.tminus,
        }
    )
    if surface == "torus":
        record["sigmaC1"] = bd.sigma_c1
        record["sigmaC2"] = bd.sigma_c2
    return record


def _cmd_convert(args, out) -> int:
    data = _load_input(args.input)
    g = _parse_goldman(data)
    if isinstance(g, coords.PantsGoldman):
        record = _bd_record("pants", coords.pants_goldman_to_bd(g))
    else:
        record = _bd_record("torus", coords.torus_goldman_to_bd(g))
    _emit_record(record, args.format if args.format != "table" else "json", out)
    return 0


def _cmd_sweep(args, out) -> int:
    data = _load_input(args.input)
    g = _parse_goldman(data)
    steps = args.steps
    if steps < 1:
        raise ValueError("steps must be at least 1")
    if isinstance(g, coords.PantsGoldman):
        surface = "pants"
        index = args.boundary - 1
        if index not in (0, 1, 2):
            raise ValueError("pants boundary index must be 1, 2 or 3")
        start = g.boundaries[index]
    else:
        surface = "torus"
        if args.boundary != 1:
            raise ValueError("only the torus boundary curve (index 1) can be pinched")
        start = g.b
    if start.kind != coords.HYPERBOLIC:
        raise ValueError("the pinched boundary must start hyperbolic")

    mu0 = coords.middle_eigenvalue(start)
    nu0 = start.tau - mu0
    log_ratio0 = math.log(nu0 / mu0)

    out.write(
        "# config: sweep surface={} boundary={} steps={} start_lambda={} start_tau={}\n".format(
            surface, args.boundary, steps, _fmt(start.lam), _fmt(start.tau)
        )
    )
    header = (
        "step,frac,lambda,tau,kind,"
        "sigma1_B1,sigma1_B2,sigma1_B3,sigma2_B1,sigma2_B2,sigma2_B3,tplus,tminus"
    )
    if surface == "torus":
        header += ",sigmaC1,sigmaC2"
    out.write(header + "\n")

    for k in range(steps + 1):
        frac = k / steps
        lam = start.lam * (1.0 - frac) + frac
        # keep mu < nu along the whole path: pinch the ratio nu/mu to 1
        ratio = math.exp(log_ratio0 * (1.0 - frac))
        if k == steps:
            boundary = coords.BoundaryData.parabolic()
        else:
            mu = 1.0 / math.sqrt(lam * ratio)
            boundary = coords.BoundaryData.hyperbolic(lam, mu + 1.0 / (lam * mu))
        if surface == "pants":
            bs = list(g.boundaries)
            bs[index] = boundary
            bd = coords.pants_goldman_to_bd(coords.PantsGoldman(tuple(bs), g.s, g.t))
            pants, extra = bd, []
        else:
            tbd = coords.torus_goldman_to_bd(
                coords.TorusGoldman(boundary, g.c, g.s, g.t, g.u, g.v)
            )
            pants, extra = tbd.pants, [tbd.sigma_c1, tbd.sigma_c2]
        row = [
            str(k),
            _fmt(frac),
            _fmt(boundary.lam),
            _fmt(boundary.tau),
            boundary.kind,
            *(_fmt(v) for v in pants.sigma1),
            *(_fmt(v) for v in pants.sigma2),
            _fmt(pants.tplus),
            _fmt(pants.tminus),
            *(_fmt(v) for v in extra),
        ]
        out.write(",".join(row) + "\n")
    return 0


def _cmd_bulge(args, out) -> int:
    data = _load_input(args.input)
    v = float(data["v"])
    if "flags" in data:
        flags = [Flag.from_json(item) for item in data["flags"]]
        if len(flags) != 4:
            raise ValueError("bulge needs exactly 4 flags")
        tol = _default_tol(args, 1e-12)
        before = [invariants.shear(*flags, i, tol=tol) for i in (1, 2)]
        flags[3] = flags[3].transform(isometry.bulging_matrix(v))
        after = [invariants.shear(*flags, i, tol=tol) for i in (1, 2)]
        record = {
            "sigma1_before": before[0],
            "sigma2_before": before[1],
            "sigma1_after": after[0],
            "sigma2_after": after[1],
            "delta_sigma1": after[0] - before[0],
            "delta_sigma2": after[1] - before[1],
        }
    else:
        s1, s2 = isometry.shear_shift(float(data["sigma1"]), float(data["sigma2"]), v)
        record = {"sigma1": s1, "sigma2": s2}
    _emit_record(record, args.format, out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projkit",
        description="Flag invariants, Hilbert metric and Goldman/Bonahon-Dreyer "
        "coordinates for convex projective surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True,
                           help="path to a JSON file, inline JSON, or - for stdin")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--tol", type=float, default=None,
                       help=f"tolerance override (also via ${_ENV_TOL})")

    p = sub.add_parser("invariants", help="triangle invariant / double ratios of flags")
    common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("classify", help="classify an SL(3,R) element")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("distance", help="Hilbert distance between two interior points")
    common(p)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("area", help="truncated ideal-triangle area experiment (CSV)")
    common(p, needs_input=False)
    p.add_argument("--alphas", default="0.5,0.25,0.1,0.05,0.01")
    p.add_argument("--truncation", type=float, default=5.0)
    p.add_argument("--cellsize", type=float, default=0.002)
    p.add_argument("--samples", type=int, default=hilbert.DEFAULT_BALL_SAMPLES)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=_cmd_area)

    p = sub.add_parser("convert", help="Goldman record -> Bonahon-Dreyer coordinates")
    common(p)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("sweep", help="pinch a boundary to parabolic, emit CSV per step")
    common(p)
    p.add_argument("--boundary", type=int, default=1)
    p.add_argument("--steps", type=int, default=10)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bulge", help="apply a bulging deformation to shears or flags")
    common(p)
    p.set_defaults(func=_cmd_bulge)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ProjKitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, KeyError, IndexError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: MalformedInput: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
