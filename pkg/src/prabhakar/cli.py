"""Command-line front end emitting CSV tables.

Grids are given as ``min:max:count:spacing`` with spacing ``linear`` or
``log``, or as a comma-separated list of values.  Numbers are written with
17 significant digits so that identical invocations give identical bytes.

Exit codes: 0 success, 1 numerical failure (or a failed CM check),
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .asymptotics import build_expansion, eval_expansion, leading_term
from .core import Method, ParameterTriple
from .errors import DomainError, PrabhakarError
from .evaluate import derivative, eval_e
from .relaxation import ModelKind, RelaxationModel, response_function, susceptibility
from .spectral import SCAN_POINTS, SCAN_RANGE, is_licm, scan_sign, spectral_curve


@dataclass(frozen=True)
class Grid:
    lo: float
    hi: float
    count: int
    spacing: str

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)


def parse_grid(text: str) -> np.ndarray:
    """Parse ``min:max:count[:spacing]`` or ``v1,v2,...`` into an array."""
    if ":" not in text:
        try:
            vals = [float(v) for v in text.split(",") if v.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad value list {text!r}")
        if not vals:
            raise argparse.ArgumentTypeError("empty value list")
        return np.array(vals)
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise argparse.ArgumentTypeError(f"grid must be min:max:count[:spacing], got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    spacing = parts[3] if len(parts) == 4 else "linear"
    if spacing not in ("linear", "log"):
        raise argparse.ArgumentTypeError(f"spacing must be linear or log, got {spacing!r}")
    if count < 2:
        raise argparse.ArgumentTypeError("grid count must be at least 2")
    if not lo < hi:
        raise argparse.ArgumentTypeError("grid needs min < max")
    if spacing == "log" and lo <= 0.0:
        raise argparse.ArgumentTypeError("log grid needs min > 0")
    return Grid(lo, hi, count, spacing).values()


def parse_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}")


def parse_tol(text: str) -> float:
    tol = float(text)
    if not 1e-15 <= tol <= 1e-2:
        raise argparse.ArgumentTypeError("tolerance must lie in [1e-15, 1e-2]")
    return tol


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


class Table:
    def __init__(self, stream, header):
        self.writer = csv.writer(stream, lineterminator="\n")
        self.writer.writerow(header)

    def row(self, *values):
        self.writer.writerow([fmt(v) for v in values])


def _triple(args, beta=None) -> ParameterTriple:
    if beta is None:
        beta = args.alpha * args.gamma if getattr(args, "beta_from_scheme", False) else args.beta
    if beta is None:
        raise DomainError("give --beta or --beta-from-scheme")
    return ParameterTriple(args.alpha, beta, args.gamma)


def _safe(fn, *a, **kw) -> float:
    try:
        return fn(*a, **kw).value
    except (PrabhakarError, ArithmeticError):
        return math.nan


def cmd_eval(args, out):
    p = _triple(args)
    tab = Table(out, ["t", "value", "method", "err_estimate"])
    for t in args.t:
        res = derivative(p, t, args.derivative, args.method, args.tol)
        tab.row(t, res.value, res.method.value, res.err_estimate)
    return 0


def cmd_table(args, out):
    betas = args.betas if args.betas else [_triple(args).beta]
    if args.derivatives is not None:
        if len(betas) != 1:
            raise DomainError("--derivatives needs a single beta")
        p = ParameterTriple(args.alpha, betas[0], args.gamma)
        ks = range(args.derivatives + 1)
        tab = Table(out, ["t"] + [f"signed_d{k}" for k in ks])
        for t in args.t:
            tab.row(t, *[(-1) ** k * derivative(p, t, k, args.method, args.tol).value for k in ks])
        return 0
    tab = Table(out, ["t"] + [f"beta={b:g}" for b in betas])
    triples = [ParameterTriple(args.alpha, b, args.gamma) for b in betas]
    for t in args.t:
        tab.row(t, *[eval_e(p, t, args.method, args.tol).value for p in triples])
    return 0


def cmd_spectral(args, out):
    p = _triple(args)
    curve = spectral_curve(p, args.r)
    tab = Table(out, ["r", "k_value", "theta"])
    for pt in curve.points:
        tab.row(pt.r, pt.k_value, pt.theta)
    return 0


def cmd_cm_check(args, out):
    p = _triple(args)
    report = is_licm(p)
    print(("LICM: " if report.ok else "NOT LICM: ") + report.reason, file=out)
    if 0.0 < p.alpha < 1.0 and p.beta > 0.0:
        curve = scan_sign(p, args.r_min, args.r_max, args.r_count)
        i = int(np.argmin(curve.k_values))
        print(f"min K(r) over {args.r_count} log points on [{args.r_min:g}, {args.r_max:g}]: "
              f"{curve.min_value:.6e} at r={curve.points[i].r:.6g}", file=out)
    if args.t is not None:
        worst = math.inf
        where = None
        for k in range(args.kmax + 1):
            for t in args.t:
                v = (-1) ** k * derivative(p, t, k, Method.AUTO, args.tol).value
                if v < worst:
                    worst, where = v, (k, t)
        print(f"min (-1)^k d^k e/dt^k for k=0..{args.kmax}: {worst:.6e} at k={where[0]}, t={where[1]:.6g}",
              file=out)
    return 0 if report.ok else 1


def cmd_compare(args, out):
    p = _triple(args)
    tab = Table(out, ["t", "series", "spectral", "ilt", "abs_series_minus_ilt", "abs_spectral_minus_ilt"])
    for t in args.t:
        ilt = eval_e(p, t, Method.ILT, args.tol).value
        ser = _safe(eval_e, p, t, Method.SERIES)
        spe = _safe(eval_e, p, t, Method.SPECTRAL, max(args.tol, 1e-10))
        tab.row(t, ser, spe, ilt, abs(ser - ilt), abs(spe - ilt))
    return 0


def cmd_asymptote(args, out):
    p = _triple(args)
    expansion = build_expansion(p, args.terms)
    tab = Table(out, ["t", "ilt", "expansion", "leading", "abs_diff", "rel_diff"])
    for t in args.t:
        ilt = eval_e(p, t, Method.ILT, args.tol).value
        approx = eval_expansion(expansion, t)
        try:
            lead = leading_term(p, t)
        except DomainError:
            lead = math.nan
        tab.row(t, ilt, approx, lead, abs(approx - ilt), abs(approx - ilt) / abs(ilt))
    return 0


def cmd_model(args, out):
    model = RelaxationModel(ModelKind(args.kind), args.alpha, args.gamma, args.tau)
    if args.omega is not None:
        print("# susceptibility with s = -i*omega; Im(chi) >= 0 for omega > 0", file=out)
        tab = Table(out, ["omega", "re_chi", "im_chi", "abs_chi"])
        for w in args.omega:
            chi = susceptibility(model, w)
            tab.row(w, chi.real, chi.imag, abs(chi))
        return 0
    tab = Table(out, ["t", "response"])
    for t in args.t:
        tab.row(t, response_function(model, t))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prabhakar", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--out", help="write CSV here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--alpha", type=float, required=True)
    params.add_argument("--beta", type=float)
    params.add_argument("--gamma", type=float, required=True)
    params.add_argument("--beta-from-scheme", action="store_true",
                        help="set beta = alpha*gamma")
    params.add_argument("--tol", type=parse_tol, default=1e-14)

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=[m.value for m in Method], default="auto")

    p = sub.add_parser("eval", parents=[params, method], help="e(t) or its derivatives on a t grid")
    p.add_argument("--t", type=parse_grid, required=True)
    p.add_argument("--derivative", type=int, default=0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[params, method],
                       help="e(t) for several beta, or signed derivatives")
    p.add_argument("--t", type=parse_grid, required=True)
    p.add_argument("--betas", type=parse_floats)
    p.add_argument("--derivatives", type=int, metavar="K",
                   help="columns (-1)^k d^k e/dt^k for k = 0..K")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("spectral", parents=[params], help="spectral density K(r) and phase")
    p.add_argument("--r", type=parse_grid, required=True)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("cm-check", parents=[params], help="complete monotonicity diagnostics")
    p.add_argument("--r-min", type=float, default=SCAN_RANGE[0])
    p.add_argument("--r-max", type=float, default=SCAN_RANGE[1])
    p.add_argument("--r-count", type=int, default=SCAN_POINTS)
    p.add_argument("--t", type=parse_grid, help="also scan signed derivatives on this grid")
    p.add_argument("--kmax", type=int, default=5)
    p.set_defaults(func=cmd_cm_check)

    p = sub.add_parser("compare", parents=[params], help="series / spectral / inversion differences")
    p.add_argument("--t", type=parse_grid, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("asymptote", parents=[params], help="inversion versus large-t expansion")
    p.add_argument("--t", type=parse_grid, required=True)
    p.add_argument("--terms", type=int, default=3)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("model", help="relaxation model response or susceptibility")
    p.add_argument("--kind", choices=[k.value for k in ModelKind], required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--tau", type=float, default=1.0)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=parse_grid)
    g.add_argument("--omega", type=parse_grid)
    p.set_defaults(func=cmd_model)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    needs_beta = hasattr(args, "beta_from_scheme") and not getattr(args, "betas", None)
    if needs_beta and args.beta is None and not args.beta_from_scheme:
        parser.error("give --beta or --beta-from-scheme")
    try:
        if needs_beta:
            _triple(args)
    except DomainError as exc:
        parser.error(str(exc))

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        return args.func(args, out)
    except (PrabhakarError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
