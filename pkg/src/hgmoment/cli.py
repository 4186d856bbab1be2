"""Command-line interface.

JSON goes to stdout (one document per invocation) with every float
printed at 17 significant digits so identical invocations are
byte-identical; the `sweep` grid and `measure --density-samples` emit CSV
instead.  Diagnostics go to stderr.  Exit codes: 0 success, 1 usage,
2 domain error, 3 numerical failure.

Parameters accept decimal, rational ("3/4") and complex ("1/2+1/4i")
literals.  Rational (and integer) literals route the pipeline through
exact arithmetic; decimals stay floating point.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
import time
from fractions import Fraction

from . import classify, gfraction, measure, moments
from .errors import (
    ConvergenceError,
    HGError,
    InconsistentSequenceError,
    NotInTError,
    ParameterError,
    PoleError,
    QuadratureError,
    SlitError,
)
from .hyp2f1 import HGParams, f21_boundary_im, f21_lambda, limit_at_one
from .quadrature import QuadratureSpec
from .scalar import GaussianRational

SCHEMA_VERSION = "1.0"

_USAGE_EXIT = 1
_DOMAIN_EXIT = 2
_NUMERIC_EXIT = 3

_DOMAIN_ERRORS = (
    ParameterError,
    SlitError,
    PoleError,
    NotInTError,
    InconsistentSequenceError,
)
_NUMERIC_ERRORS = (ConvergenceError, QuadratureError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_RAT = r"[+-]?\d+(?:/\d+)?"
_DEC = r"[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?"


def _parse_real(text: str):
    """Fraction for 'p/q' or integer literals, float otherwise."""
    t = text.strip()
    if re.fullmatch(_RAT, t):
        return Fraction(t)
    try:
        return float(t)
    except ValueError:
        raise UsageError(f"cannot parse parameter {text!r}") from None


def parse_param(text: str):
    """Parse a real/rational/complex parameter literal."""
    t = text.strip().replace(" ", "")
    if not t.endswith("i") and not t.endswith("I"):
        return _parse_real(t)
    body = t[:-1]
    # split off the imaginary term: scan for the last +/- not at position 0
    # and not part of an exponent
    split = None
    for i in range(len(body) - 1, 0, -1):
        ch = body[i]
        if ch in "+-" and body[i - 1] not in "eE/":
            split = i
            break
    if split is None:
        re_part, im_part = "0", body if body not in ("", "+", "-") else body + "1"
    else:
        re_part, im_part = body[:split], body[split:]
    if im_part in ("", "+", "-"):
        im_part += "1"
    re_v = _parse_real(re_part)
    im_v = _parse_real(im_part)
    if isinstance(re_v, Fraction) and isinstance(im_v, Fraction):
        return GaussianRational(re_v, im_v)
    return complex(float(re_v), float(im_v))


def _echo_param(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, GaussianRational):
        return str(v)
    if isinstance(v, complex):
        sign = "+" if v.imag >= 0 else "-"
        return f"{_fmt_float(v.real)}{sign}{_fmt_float(abs(v.imag))}i"
    return _fmt_float(float(v))


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return "%.17g" % x


def _to_jsonable(obj):
    """Normalize payload values to dict/list/str/int/float/bool/None."""
    if isinstance(obj, dict):
        return {str(k): _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, GaussianRational):
        return str(obj)
    if isinstance(obj, float) or isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


def _write_json(obj, out) -> None:
    """Deterministic JSON writer: sorted keys, floats at 17 significant
    digits (json.dump would use shortest-roundtrip repr instead)."""

    def emit(v):
        if v is None:
            out.write("null")
        elif isinstance(v, bool):
            out.write("true" if v else "false")
        elif isinstance(v, int):
            out.write(str(v))
        elif isinstance(v, float):
            out.write(_fmt_float(v))
        elif isinstance(v, str):
            out.write('"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"')
        elif isinstance(v, dict):
            out.write("{")
            for i, k in enumerate(sorted(v)):
                if i:
                    out.write(",")
                emit(str(k))
                out.write(":")
                emit(v[k])
            out.write("}")
        elif isinstance(v, list):
            out.write("[")
            for i, item in enumerate(v):
                if i:
                    out.write(",")
                emit(item)
            out.write("]")
        else:  # pragma: no cover - _to_jsonable normalizes everything
            emit(str(v))

    emit(obj)
    out.write("\n")


def _build_parser() -> _Parser:
    p = _Parser(prog="hgmoment", description=__doc__)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def abc(sp):
        sp.add_argument("a")
        sp.add_argument("b")
        sp.add_argument("c")

    abc(sub.add_parser("classify", help="membership of F(a,b;c;.) in the moment class"))
    abc(sub.add_parser("starlike", help="universal starlikeness of z F(a,b;c;z)"))

    sp = sub.add_parser("eval", help="evaluate F on the slit plane")
    abc(sp)
    sp.add_argument("--z", required=True)

    sp = sub.add_parser("boundary", help="Im F^+(x) on the slit, x > 1")
    abc(sp)
    sp.add_argument("--x", required=True, type=float)

    abc(sub.add_parser("limit1", help="classify the z -> 1 limit"))

    sp = sub.add_parser("measure", help="representing measure summary / density CSV")
    abc(sp)
    sp.add_argument("--density-samples", type=int, default=0)

    sp = sub.add_parser("reconstruct", help="quadrature reconstruction vs direct value")
    abc(sp)
    sp.add_argument("--z", required=True)
    sp.add_argument("--level", type=int, default=10)

    sp = sub.add_parser("gfrac", help="series -> Wall g-parameters (membership oracle)")
    abc(sp)
    sp.add_argument("--n", type=int, default=40)
    sp.add_argument("--ratio-z", default=None, help="also check the Gauss fraction ratio")

    sp = sub.add_parser("tm", help="total monotonicity of the coefficient sequence")
    abc(sp)

    abc(sub.add_parser("verify", help="measure verification report"))

    sp = sub.add_parser("sweep", help="classify over a rectangular grid; CSV output")
    for name in ("a", "b", "c"):
        sp.add_argument(
            f"--{name}-range", nargs=3, metavar=("MIN", "MAX", "COUNT"), required=True
        )
    return p


def _params_exact(vals) -> bool:
    return all(isinstance(v, (Fraction, GaussianRational)) for v in vals)


def _as_float3(vals):
    out = []
    for v in vals:
        if isinstance(v, GaussianRational):
            if not v.is_real:
                raise ParameterError("this command needs real parameters")
            out.append(float(v.re))
        elif isinstance(v, complex):
            if abs(v.imag) > 1e-12:
                raise ParameterError("this command needs real parameters")
            out.append(v.real)
        else:
            out.append(float(v))
    return out


def _range_grid(spec):
    lo = _parse_real(spec[0])
    hi = _parse_real(spec[1])
    n = int(spec[2])
    if n < 1:
        raise UsageError("range COUNT must be >= 1")
    if n == 1:
        return [Fraction(lo)]
    lo, hi = Fraction(lo), Fraction(hi)
    step = (hi - lo) / (n - 1)
    return [lo + k * step for k in range(n)]


def _run_command(args, out) -> None:
    started = time.perf_counter()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "options": {"seed": args.seed},
    }
    abc = None
    if hasattr(args, "a"):
        abc = [parse_param(args.a), parse_param(args.b), parse_param(args.c)]
        if args.exact and not _params_exact(abc):
            raise UsageError("--exact requires rational parameter literals")
        payload["params"] = {
            "a": _echo_param(abc[0]),
            "b": _echo_param(abc[1]),
            "c": _echo_param(abc[2]),
        }

    if args.command == "classify":
        r = classify.classify_T(*abc)
        payload["result"] = {
            "verdict": r.verdict.value,
            "reason": r.reason.value,
            "in_t": r.in_t,
            "boundary": r.boundary,
            "power_exponent": _echo_param(r.power_exponent)
            if r.power_exponent is not None
            else None,
            "normalized": [_echo_param(v) for v in r.normalized],
        }
    elif args.command == "starlike":
        r = classify.classify_starlike(*abc)
        payload["result"] = {
            "universally_starlike": r.verdict,
            "branch": r.branch.value,
            "power_exponent": _echo_param(r.power_exponent)
            if r.power_exponent is not None
            else None,
        }
    elif args.command == "eval":
        z = parse_param(args.z)
        zc = complex(z) if not isinstance(z, Fraction) else complex(float(z))
        a, b, c = (complex(v) if isinstance(v, GaussianRational) else v for v in abc)
        res = f21_lambda(HGParams(a, b, c), zc)
        payload["result"] = {"value": _to_jsonable(res.value), "method": res.method.value}
        payload["error_estimates"] = {"abs_error": res.abs_error_estimate}
    elif args.command == "boundary":
        a, b, c = _as_float3(abc)
        v = f21_boundary_im(HGParams(a, b, c), args.x)
        payload["result"] = {"x": args.x, "imag_boundary_value": v}
    elif args.command == "limit1":
        a, b, c = _as_float3(abc)
        r = limit_at_one(HGParams(a, b, c))
        payload["result"] = {
            "kind": r.kind.value,
            "coefficient": _to_jsonable(r.coefficient),
            "exponent": r.exponent,
        }
    elif args.command == "measure":
        a, b, c = _as_float3(abc)
        m = measure.representing_measure(a, b, c)
        n = args.density_samples
        if n and args.format == "csv":
            out.write("t,density\n")
            for i in range(n):
                t = (i + 1) / (n + 1)
                rho = (
                    measure.density_eval(m, t)
                    if m.density_kind is not measure.DensityKind.NONE
                    else 0.0
                )
                out.write(f"{_fmt_float(t)},{_fmt_float(rho)}\n")
            return
        result = {
            "alpha0": m.alpha0,
            "alpha1": m.alpha1,
            "density_kind": m.density_kind.value,
            "params_normalized": list(m.params),
        }
        if n:
            result["density_samples"] = [
                [
                    (i + 1) / (n + 1),
                    measure.density_eval(m, (i + 1) / (n + 1))
                    if m.density_kind is not measure.DensityKind.NONE
                    else 0.0,
                ]
                for i in range(n)
            ]
        payload["result"] = result
    elif args.command == "reconstruct":
        a, b, c = _as_float3(abc)
        z = parse_param(args.z)
        zc = complex(z) if not isinstance(z, Fraction) else complex(float(z))
        m = measure.representing_measure(a, b, c)
        spec = QuadratureSpec(
            level=args.level, abs_tol=args.tol if args.tol else 1e-8
        )
        recon = measure.reconstruct(m, zc, spec)
        direct = f21_lambda(HGParams(a, b, c), zc)
        payload["result"] = {
            "reconstructed": _to_jsonable(recon),
            "direct": _to_jsonable(direct.value),
            "difference": abs(recon - direct.value),
        }
        payload["error_estimates"] = {"direct_abs_error": direct.abs_error_estimate}
    elif args.command == "gfrac":
        n = args.depth if args.depth else args.n
        if _params_exact(abc):
            a, b, c = abc
            if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
                seq = classify.tm_coefficients(a, b, abc[2], n)
            else:
                seq = classify.tm_coefficients(a, b, c, n)
        else:
            av, bv, cv = _as_float3(abc)
            vals = [1.0]
            g = 1.0
            for k in range(n):
                g *= (av + k) * (bv + k) / ((cv + k) * (k + 1.0))
                vals.append(g)
            seq = vals
        tol = args.tol if args.tol is not None else 0.0
        r = gfraction.series_to_gfraction(seq, n, tol)
        result = {
            "status": r.status.value,
            "in_t": r.in_t,
            "g": [float(x) for x in r.gfraction.g],
            "fail_index": r.fail_index,
            "fail_value": float(r.fail_value) if r.fail_value is not None else None,
        }
        if args.ratio_z is not None:
            av, bv, cv = _as_float3(abc)
            z = complex(parse_param(args.ratio_z))
            cf, direct, diff = gfraction.gauss_ratio_check(av, bv, cv, z)
            result["gauss_ratio"] = {
                "cf_value": _to_jsonable(cf),
                "direct_value": _to_jsonable(direct),
                "difference": diff,
            }
        payload["result"] = result
    elif args.command == "tm":
        depth = args.depth if args.depth else 40
        tol = args.tol if args.tol is not None else 0.0
        if _params_exact(abc):
            a, b, c = abc
            seq = classify.tm_coefficients(a, b, c, depth)
            verdict = moments.is_totally_monotone(seq, depth, 0.0)
        else:
            av, bv, cv = _as_float3(abc)
            vals = [1.0]
            g = 1.0
            for k in range(depth):
                g *= (av + k) * (bv + k) / ((cv + k) * (k + 1.0))
                vals.append(g)
            verdict = moments.is_totally_monotone(
                moments.MomentSequence(tuple(vals)), depth, tol
            )
        payload["result"] = {
            "holds": verdict.holds,
            "violation": None
            if verdict.violation is None
            else {
                "m": verdict.violation[0],
                "n": verdict.violation[1],
                "value": float(verdict.violation[2]),
            },
            "depth": depth,
            "exact": _params_exact(abc),
        }
    elif args.command == "verify":
        a, b, c = _as_float3(abc)
        spec = QuadratureSpec(abs_tol=args.tol if args.tol else 1e-8)
        rep = measure.verify_measure(a, b, c, n_moments=args.depth or 20, spec=spec)
        payload["result"] = {
            "alpha1": rep.alpha1,
            "density_kind": rep.density_kind,
            "max_moment_defect": rep.max_moment_defect,
            "mass_defect": rep.mass_defect,
            "min_density": rep.min_density,
            "max_reconstruction_error": rep.max_reconstruction_error,
            "negativity_flag": rep.negativity_flag,
            "boundary_branch_gap": rep.boundary_branch_gap,
        }
    elif args.command == "sweep":
        grid_a = _range_grid(args.a_range)
        grid_b = _range_grid(args.b_range)
        grid_c = _range_grid(args.c_range)
        rows = []
        for av in grid_a:
            for bv in grid_b:
                for cv in grid_c:
                    r = classify.classify_T(av, bv, cv)
                    rows.append(
                        (
                            str(av),
                            str(bv),
                            str(cv),
                            r.verdict.value,
                            r.reason.value,
                            "1" if r.boundary else "0",
                        )
                    )
        rows.sort()
        out.write("a,b,c,verdict,reason,boundary\n")
        for row in rows:
            out.write(",".join(row) + "\n")
        return
    else:  # pragma: no cover
        raise UsageError(f"unknown command {args.command!r}")

    payload["timings"] = {"seconds": time.perf_counter() - started}
    _write_json(_to_jsonable(payload), out)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _run_command(args, sys.stdout)
        return 0
    except UsageError as exc:
        _write_json({"error": {"kind": "usage", "message": str(exc)}}, sys.stdout)
        print(f"usage error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except _DOMAIN_ERRORS as exc:
        _write_json(
            {"error": {"kind": type(exc).__name__, "message": str(exc)}}, sys.stdout
        )
        print(f"domain error: {exc}", file=sys.stderr)
        return _DOMAIN_EXIT
    except _NUMERIC_ERRORS as exc:
        _write_json(
            {"error": {"kind": type(exc).__name__, "message": str(exc)}}, sys.stdout
        )
        print(f"numerical failure: {exc}", file=sys.stderr)
        return _NUMERIC_EXIT


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
