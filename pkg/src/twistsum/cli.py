"""Command-line interface.

One subcommand per operation family; JSON on stdout by default (``--text``
switches to a line-oriented rendering).  Exact values are always serialized
as strings ("p/q", or the {"k", "coeffs"} object for irrational cyclotomic
values) so precision is never silently lost; numeric values are {"re", "im"}
doubles.  Exit codes: 0 success, 1 computational error (with a JSON error
object), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from . import verify as verify_mod
from .bernoulli_euler import TwistSpec, WeightVector, gen_euler_numbers, gen_euler_poly
from .euler_maclaurin import SmoothFunction, em_sum_scaled, em_sum_unit
from .exact import CyclotomicNumber, format_rational, parse_rational
from .powersum import SumSpec, brute_sum, closed_sum, closed_sum_trace
from .twisted_c import CPolySpec, c_poly, c_star, c_star_multi, c_tilde
from .zeta import (
    ZetaSpec,
    decay_probe,
    finite_sum_asymptotic,
    zeta_accelerated,
    zeta_asymptotic,
    zeta_direct,
)

DEFAULT_TOL = float(os.environ.get("TWISTSUM_TOL", "1e-10"))


def _ser_exact(value: CyclotomicNumber):
    """Rational string when possible, else the {"k", "coeffs"} object."""
    if value.is_rational():
        return format_rational(value.as_rational())
    return value.to_json_obj()


def _ser_complex(value: complex) -> dict:
    return {"re": value.real, "im": value.imag}


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part != "")


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"cannot parse complex number from {text!r}")


def _render(obj: dict, text_mode: bool) -> str:
    if not text_mode:
        return json.dumps(obj, sort_keys=True)
    lines = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}.", value[key])
        elif isinstance(value, list):
            lines.append(f"{prefix[:-1]} = {json.dumps(value, sort_keys=True)}")
        else:
            lines.append(f"{prefix[:-1]} = {value}")

    walk("", obj)
    return "\n".join(lines)


def _make_smooth(preset: str) -> SmoothFunction:
    kind, _, payload = preset.partition(":")
    if kind == "poly":
        coeffs = [Fraction(part) for part in payload.split(",") if part != ""]
        return SmoothFunction.from_poly_coeffs(coeffs)
    if kind == "exp":
        return SmoothFunction.exponential(float(payload))
    raise ValueError(f"unknown preset {preset!r}; use poly:c0,c1,... or exp:alpha")


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_sum(args) -> dict:
    if len(args.weights) > 20:
        raise ValueError("at most 20 weights (the closed form enumerates 2^r subsets)")
    spec = SumSpec(
        WeightVector(args.weights),
        args.limits,
        parse_rational(args.x),
        args.s,
        TwistSpec(args.k, args.t),
    )
    out: dict = {
        "spec": {
            "weights": list(spec.A.entries),
            "limits": list(spec.N),
            "x": format_rational(spec.x),
            "s": spec.s,
            "k": spec.twist.k,
            "t": spec.twist.t,
        }
    }
    if args.method in ("closed", "both"):
        out["closed"] = _ser_exact(closed_sum(spec))
    if args.method in ("brute", "both"):
        out["brute"] = _ser_exact(brute_sum(spec))
    if args.method == "both":
        out["equal"] = out["closed"] == out["brute"]
    if args.trace:
        out["trace"] = closed_sum_trace(spec)
    return out


def _cmd_euler_gen(args) -> dict:
    twist = TwistSpec(args.k, args.t)
    A = WeightVector(args.weights)
    if args.poly:
        poly = gen_euler_poly(args.order, twist, A)
        return {"poly": [_ser_exact(poly.coeff(i)) for i in range(args.order + 1)]}
    values = gen_euler_numbers(args.order, twist, A)
    return {"values": [_ser_exact(v) for v in values]}


def _cmd_c_values(args) -> dict:
    out: dict = {}
    numeric = args.numeric
    if args.multi:
        value = c_star_multi(args.n, args.k, args.multi)
        out["c_star_multi"] = _ser_complex(value.embed()) if numeric else _ser_exact(value)
        return out
    if args.a is None:
        raise ValueError("--a is required unless --multi is given")
    spec = CPolySpec(args.n, args.k, args.a)
    if args.star:
        value = c_star(args.n, args.k, args.a)
        out["c_star"] = _ser_complex(value.embed()) if numeric else _ser_exact(value)
        return out
    if args.x is not None:
        tilde = c_tilde(spec, parse_rational(args.x))
        out["c_tilde"] = _ser_complex(tilde.embed()) if numeric else _ser_exact(tilde)
        return out
    poly = c_poly(spec)
    coeffs = [poly.coeff(i) for i in range(poly.degree() + 1)] or [CyclotomicNumber.zero(args.k)]
    out["c_poly"] = [
        _ser_complex(c.embed()) if numeric else _ser_exact(c) for c in coeffs
    ]
    return out


def _cmd_em_sum(args) -> dict:
    f = _make_smooth(args.preset)
    runner = em_sum_scaled if args.scaled else em_sum_unit
    res = runner(f, args.m, args.n, args.k, args.a, args.q)
    return {
        "main_terms": _ser_complex(res.main_terms),
        "remainder": _ser_complex(res.remainder),
        "total": _ser_complex(res.total),
        "direct": _ser_complex(res.direct),
        "abs_error": res.abs_error,
    }


def _cmd_zeta(args) -> dict:
    spec = ZetaSpec(
        _parse_complex(args.s),
        float(args.x),
        TwistSpec(args.k, args.t),
        WeightVector(args.weights),
        args.q,
    )
    if args.method == "direct":
        value = zeta_direct(spec, args.terms)
    elif args.method == "accel":
        value = zeta_accelerated(spec, tol=args.tol)
    elif args.method == "asym":
        value = zeta_asymptotic(spec)
    else:  # finite: the inclusion-exclusion approximation of a finite box sum
        if args.limits is None:
            raise ValueError("--limits is required for --method finite")
        value = finite_sum_asymptotic(spec, args.limits)
    return {"method": args.method, "value": _ser_complex(value)}


def _cmd_probe(args) -> dict:
    target = {"t3": "limits", "t4": "shift"}[args.target]
    spec = ZetaSpec(
        _parse_complex(args.s),
        float(args.x),
        TwistSpec(args.k, args.t),
        WeightVector(args.weights),
        args.q,
    )
    scales = [float(v) if target == "shift" else int(v) for v in args.scales.split(",")]
    report = decay_probe(target, spec, scales)
    return report.to_json_obj()


def _cmd_verify(args) -> dict:
    reports = verify_mod.run_suites(args.suite, args.seed)
    failures = sum(rep.failures for rep in reports)
    return {
        "suite": args.suite,
        "seed": args.seed,
        "failures": failures,
        "reports": [rep.to_json_obj() for rep in reports],
    }


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistsum",
        description="Exact twisted/alternating power sums and their asymptotics",
        allow_abbrev=False,
    )
    parser.add_argument("--text", action="store_true", help="line output instead of JSON")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    parser.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="numeric tolerance for accelerated evaluations (env TWISTSUM_TOL)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="finite twisted power sum, closed form and/or brute force")
    p.add_argument("--weights", type=_parse_ints, required=True)
    p.add_argument("--limits", type=_parse_ints, required=True)
    p.add_argument("--x", default="0")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("closed", "brute", "both"), default="both")
    p.add_argument("--trace", action="store_true", help="include the per-subset decomposition")
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("euler-gen", help="generalized Euler numbers or polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--weights", type=_parse_ints, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--poly", action="store_true", help="emit E_order(x,...) coefficients")
    p.set_defaults(handler=_cmd_euler_gen)

    p = sub.add_parser("c-values", help="twisted Bernoulli-type values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--x", help="evaluate the periodic value at this rational point")
    p.add_argument("--star", action="store_true")
    p.add_argument("--multi", type=_parse_ints, help="starred multinomial value for these weights")
    p.add_argument("--numeric", action="store_true", help="emit complex embeddings")
    p.set_defaults(handler=_cmd_c_values)

    p = sub.add_parser("em-sum", help="twisted Euler-Maclaurin evaluation")
    p.add_argument("--preset", required=True, help="poly:c0,c1,... or exp:alpha")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--scaled", action="store_true", help="sum zeta^{ar} g(r) on the integer lattice")
    p.set_defaults(handler=_cmd_em_sum)

    p = sub.add_parser("zeta", help="generalized Euler-zeta evaluation")
    p.add_argument("--s", required=True, help="decay order, RE or RE,IM")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--weights", type=_parse_ints, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--method", choices=("direct", "accel", "asym", "finite"), default="accel")
    p.add_argument("--terms", type=int, default=400, help="blocks per axis for --method direct")
    p.add_argument("--limits", type=_parse_ints, help="box limits for --method finite")
    p.set_defaults(handler=_cmd_zeta)

    p = sub.add_parser("probe", help="empirical decay-rate probe")
    p.add_argument("--target", choices=("t3", "t4"), required=True)
    p.add_argument("--scales", required=True, help="comma-separated increasing scales")
    p.add_argument("--s", required=True)
    p.add_argument("--x", type=float, default=1.0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--weights", type=_parse_ints, required=True)
    p.add_argument("--q", type=int)
    p.set_defaults(handler=_cmd_probe)

    p = sub.add_parser("verify", help="run the randomized verification suites")
    p.add_argument("--suite", choices=verify_mod.SUITE_NAMES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except Exception as exc:
        payload = json.dumps({"error": str(exc), "type": type(exc).__name__}, sort_keys=True)
        print(payload, file=sys.stderr)
        return 1
    rendered = _render(result, args.text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    if args.command == "verify" and result["failures"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
