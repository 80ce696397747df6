"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 numeric-domain error, 4 I/O error.
"""
import argparse
from concurrent.futures import ProcessPoolExecutor
import json
import math
import sys

import numpy as np

from . import thermal
from .chain import ChainParams, chain_pair_concurrence
from .entanglement import entanglement_of_formation
from .errors import SpinPairError
from .model import PairParams, boundary_xi, ground_phase
from .thermal import ThermalPoint, threshold_temperature

EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

AXES = ("T", "B", "xi", "b")
SWEEP_DIGITS = 12


def _fmt(v, digits=None):
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v)) if digits is None else f"{float(v):.{digits}g}"
    return str(v)


def _emit(record, as_json, out=None):
    out = out or sys.stdout
    if as_json:
        clean = {k: (float(v) if isinstance(v, np.floating) else v) for k, v in record.items()}
        out.write(json.dumps(clean) + "\n")
    else:
        out.write(",".join(record) + "\n")
        out.write(",".join(_fmt(v) for v in record.values()) + "\n")


def _pair_params(args, parser):
    if (args.b is None) == (args.xi is None):
        parser.error("exactly one of --b and --xi is required")
    if args.xi is not None:
        return PairParams.from_xi(args.J, args.B, args.xi)
    return PairParams(args.J, args.B, args.b)


def _add_pair_args(p, need_field=True):
    p.add_argument("--J", type=float, required=True, help="exchange coupling (J<0 ferro, J>0 antiferro)")
    p.add_argument("--B", type=float, default=0.0, help="uniform field component")
    p.add_argument("--b", type=float, help="inhomogeneous field component")
    p.add_argument("--xi", type=float, help="inhomogeneity sqrt(1 + (b/J)^2); maps to b = |J| sqrt(xi^2 - 1)")
    p.add_argument("--json", action="store_true", help="print a JSON object instead of CSV")


def point_record(params, T, method="closed"):
    pt = ThermalPoint(params, T)
    if method == "oracle":
        rho, Z = thermal.gibbs_matrix(params, T)
        u_plus, u_minus = rho[0, 0].real, rho[3, 3].real
        w = 0.5 * (rho[1, 1].real + rho[2, 2].real)
        z = rho[1, 2].real
        c = thermal.concurrence_oracle(pt)
    else:
        x = thermal.gibbs_xstate(pt)
        Z = thermal.partition_function(pt)
        u_plus, u_minus, w, z = x.u_plus, x.u_minus, x.w, x.z
        c = thermal.concurrence_closed_form(pt)
    return {
        "J": params.J, "B": params.B, "b": params.b, "delta": params.delta,
        "xi": params.xi, "T": pt.T, "Z": Z, "u_plus": u_plus, "u_minus": u_minus,
        "w": w, "z": z, "concurrence": c, "eof": entanglement_of_formation(c),
    }


def cmd_point(args, parser):
    params = _pair_params(args, parser)
    _emit(point_record(params, args.T, args.method), args.json)


def cmd_ground(args, parser):
    if args.boundary_curve:
        if args.steps < 2 or not args.B_min < args.B_max:
            parser.error("--boundary-curve needs B-min < B-max and --steps >= 2")
        if args.J == 0:
            raise SpinPairError("coupling J must be nonzero")
        sys.stdout.write("B,xi_boundary\n")
        for B in np.linspace(args.B_min, args.B_max, args.steps):
            xb = boundary_xi(args.J, B)
            if xb >= 1.0:
                sys.stdout.write(f"{_fmt(B, SWEEP_DIGITS)},{_fmt(xb, SWEEP_DIGITS)}\n")
        return
    params = _pair_params(args, parser)
    g = ground_phase(params)
    _emit({"J": params.J, "B": params.B, "b": params.b, "xi": params.xi,
           "phase": g.label, "energy": g.energy, "concurrence": g.concurrence}, args.json)


def cmd_threshold(args, parser):
    if args.xi_range is not None:
        lo, hi, steps = args.xi_range
        steps = int(steps)
        if steps < 2 or not 1.0 <= lo < hi:
            parser.error("--xi-range needs 1 <= MIN < MAX and STEPS >= 2")
        sys.stdout.write("xi,T_c_ferro,T_c_antiferro\n")
        for xi in np.linspace(lo, hi, steps):
            ferro = threshold_temperature(-1, xi).T_c
            anti = threshold_temperature(1, xi).T_c
            sys.stdout.write(",".join(_fmt(v, SWEEP_DIGITS) for v in (xi, ferro, anti)) + "\n")
        return
    if args.xi is None or args.J is None:
        parser.error("give --J and --xi, or --xi-range")
    res = threshold_temperature(args.J, args.xi)
    if args.json:
        _emit({"J_sign": 1 if args.J > 0 else -1, "xi": args.xi, "T_c": res.T_c,
               "beta_lo": res.bracket[0], "beta_hi": res.bracket[1],
               "residual": res.residual}, True)
    else:
        sys.stdout.write(("none" if res.T_c is None else repr(res.T_c)) + "\n")


def _axis_values(name, lo, hi, steps, log):
    if log and name == "T":
        return np.geomspace(lo, hi, steps)
    return np.linspace(lo, hi, steps)


def _sweep_rows(task):
    J, names, values1, values2, fixed = task
    grid = {names[0]: values1[:, None], names[1]: values2[None, :]}
    grid.update({k: v for k, v in fixed.items() if k not in grid})
    if "xi" in grid:
        xi = grid["xi"]
    else:
        xi = np.sqrt(1.0 + (np.asarray(grid["b"]) / J) ** 2)
    c = thermal.concurrence_array(J, grid["B"], xi, grid["T"])
    return np.broadcast_to(c, (len(values1), len(values2)))


def sweep_grid(J, axis1, axis2, fixed, log=False, jobs=1):
    """Concurrence on the (axis1 x axis2) grid; returns (values1, values2, table)."""
    v1 = _axis_values(*axis1, log)
    v2 = _axis_values(*axis2, log)
    names = (axis1[0], axis2[0])
    if jobs <= 1 or len(v1) < 2:
        table = _sweep_rows((J, names, v1, v2, fixed))
    else:
        chunks = [c for c in np.array_split(v1, jobs) if len(c)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_sweep_rows, [(J, names, c, v2, fixed) for c in chunks]))
        table = np.vstack(parts)
    return v1, v2, table


def _parse_axis(raw, parser):
    name, lo, hi, steps = raw
    if name not in AXES:
        parser.error(f"axis name must be one of {', '.join(AXES)}, got {name!r}")
    try:
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError:
        parser.error(f"bad axis specification {' '.join(raw)!r}")
    if steps < 2 or not lo < hi:
        parser.error(f"axis {name}: need MIN < MAX and STEPS >= 2")
    return name, lo, hi, steps


def cmd_sweep(args, parser):
    a1 = _parse_axis(args.axis1, parser)
    a2 = _parse_axis(args.axis2, parser)
    names = {a1[0], a2[0]}
    if len(names) < 2:
        parser.error("axis names must be distinct")
    if names == {"xi", "b"}:
        parser.error("xi and b are the same knob; sweep only one of them")
    for name, lo, _, _ in (a1, a2):
        if name == "xi" and lo < 1.0:
            raise SpinPairError("xi axis values must be >= 1")
        if name == "T" and lo <= 0.0:
            raise SpinPairError("T axis values must be > 0")
    given = {k: getattr(args, k) for k in AXES if getattr(args, k) is not None}
    clash = names & set(given)
    if clash:
        parser.error(f"{', '.join(sorted(clash))} given both as axis and as fixed value")
    if "xi" in given and "b" in given:
        parser.error("exactly one of --b and --xi is allowed")
    fixed = dict(given)
    if "B" not in names:
        fixed.setdefault("B", 0.0)
    if "T" not in names and "T" not in fixed:
        parser.error("--T is required unless T is an axis")
    if not names & {"xi", "b"} and not fixed.keys() & {"xi", "b"}:
        parser.error("one of --b or --xi is required unless it is an axis")
    if "xi" in fixed and fixed["xi"] < 1.0:
        raise SpinPairError("xi must be >= 1")

    v1, v2, table = sweep_grid(args.J, a1, a2, fixed, args.log, args.jobs)
    meta = [f"J={_fmt(float(args.J))}"]
    meta += [f"{k}={_fmt(float(v))}" for k, v in sorted(fixed.items())]
    for label, (name, lo, hi, steps) in (("axis1", a1), ("axis2", a2)):
        spacing = "log" if args.log and name == "T" else "linear"
        meta.append(f"{label}={name}[{_fmt(lo)};{_fmt(hi)};{steps};{spacing}]")
    lines = ["# spinpair sweep", "# " + ",".join(meta), f"{a1[0]},{a2[0]},concurrence"]
    for i, x in enumerate(v1):
        for j, y in enumerate(v2):
            lines.append(",".join(_fmt(v, SWEEP_DIGITS) for v in (x, y, table[i, j])))
    text = "\n".join(lines) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)


def cmd_chain(args, parser):
    try:
        fields = tuple(float(f) for f in args.fields.split(","))
        pair = tuple(int(s) for s in args.pair.split(","))
    except ValueError:
        parser.error("--fields and --pair take comma-separated numbers")
    if len(pair) != 2:
        parser.error("--pair takes exactly two site indices")
    cp = ChainParams(args.n, args.J, fields, args.boundary)
    r = chain_pair_concurrence(cp, tuple(sorted(pair)), args.T)
    _emit({"pair": f"{r.pair[0]}-{r.pair[1]}" , "T": r.T, "concurrence": r.concurrence,
           "effective_xi": r.effective_xi, "pair_model_concurrence": r.pair_model_concurrence,
           "gap": r.gap}, args.json)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spinpair",
        description="Thermal and ground-state entanglement of two Heisenberg spins "
                    "in an inhomogeneous magnetic field.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="state and concurrence at one (J, B, b|xi, T)")
    _add_pair_args(p)
    p.add_argument("--T", type=float, required=True, help="temperature (k = 1)")
    p.add_argument("--method", choices=("closed", "oracle"), default="closed")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("ground", help="zero-temperature phase and concurrence")
    _add_pair_args(p)
    p.add_argument("--boundary-curve", action="store_true",
                   help="print the phase boundary xi(B) as CSV instead")
    p.add_argument("--B-min", type=float, default=0.0)
    p.add_argument("--B-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=31)
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("threshold", help="temperature above which entanglement vanishes")
    p.add_argument("--J", type=float, help="only the sign is used")
    p.add_argument("--xi", type=float)
    p.add_argument("--xi-range", nargs=3, type=float, metavar=("MIN", "MAX", "STEPS"),
                   help="CSV of xi, ferro and antiferro thresholds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("sweep", help="concurrence over a 2-D parameter grid, written as CSV")
    p.add_argument("--J", type=float, required=True)
    p.add_argument("--axis1", nargs=4, required=True, metavar=("NAME", "MIN", "MAX", "STEPS"))
    p.add_argument("--axis2", nargs=4, required=True, metavar=("NAME", "MIN", "MAX", "STEPS"))
    p.add_argument("--B", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--xi", type=float)
    p.add_argument("--T", type=float)
    p.add_argument("--log", action="store_true", help="log spacing on a T axis")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", "-o", required=True, help="CSV path, or - for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("chain", help="pair concurrence in an N-site chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J", type=float, required=True)
    p.add_argument("--fields", required=True, help="comma-separated local fields B_i")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--pair", default="0,1")
    p.add_argument("--boundary", choices=("open", "periodic"), default="open")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, parser)
    except SpinPairError as exc:
        print(f"spinpair: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"spinpair: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
