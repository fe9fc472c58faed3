"""Command-line front end.

Three subcommands: `compute` (one number, by any of the three methods),
`chamber-poly` (the polynomial of a chamber, serialized), and `verify`
(run a named identity suite).  All structured output is JSON on stdout;
rationals are strings "num/den" so no consumer ever rounds them.

Exit codes: 0 success; 1 verification mismatch; 2 malformed arguments;
3 evaluation point on a wall; 4 size/order bound exceeded; 5 degenerate
signature (no polynomial exists).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .charactereval import hurwitz_connected_simple, hurwitz_disconnected
from .oracle import BoundExceeded, FactorizationSpec, count_factorizations
from .partitions import SizeMismatch
from .wedge import (
    DegenerateSignature,
    OnWall,
    chamber_of,
    chamber_polynomial,
    evaluate,
    walls,
)
from . import verify as verify_mod

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_ON_WALL = 3
EXIT_BOUND = 4
EXIT_DEGENERATE = 5

PURE_KINDS = ("simple", "monotone", "strict")


class _UsageError(Exception):
    pass


def _rat(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _parts(text: str) -> tuple:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _UsageError(f"expected comma-separated integers, got {text!r}")
    if not out or any(x < 1 for x in out):
        raise _UsageError(f"parts must be positive integers, got {text!r}")
    return out


def _signature(args) -> tuple:
    """(p, q, r) from --g or --p/--q/--r, depending on the type."""
    has_pqr = any(v is not None for v in (args.p, args.q, args.r))
    if args.type == "mixed":
        if args.g is not None or not has_pqr:
            raise _UsageError("mixed type takes --p/--q/--r, not --g")
        p, q, r = args.p or 0, args.q or 0, args.r or 0
        if min(p, q, r) < 0:
            raise _UsageError("--p/--q/--r must be >= 0")
        return p, q, r
    if has_pqr or args.g is None:
        raise _UsageError(f"type {args.type} takes --g, not --p/--q/--r")
    if args.g < 0:
        raise _UsageError("--g must be >= 0")
    return args.g, None, None


def _pure_pqr(kind: str, g: int, m: int, n: int) -> tuple:
    b = 2 * g - 2 + m + n  # >= 0 whenever g >= 0 and the profiles are nonempty
    return {"simple": (b, 0, 0), "monotone": (0, b, 0), "strict": (0, 0, b)}[kind]


def _emit(payload: dict, out_path) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    print(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")


def cmd_compute(args) -> int:
    mu, nu = _parts(args.mu), _parts(args.nu)
    sig = _signature(args)
    if args.type == "mixed":
        p, q, r = sig
    else:
        g = sig[0]
        p, q, r = _pure_pqr(args.type, g, len(mu), len(nu))
    if args.connected:
        if args.method == "chamber":
            raise _UsageError("--connected is not available for --method chamber")
        if args.method == "character" and args.type != "simple":
            raise _UsageError("--connected with --method character needs --type simple")

    if args.method == "oracle":
        spec = FactorizationSpec(mu, nu, p, q, r, connected=args.connected)
        value = count_factorizations(spec).value
    elif args.method == "character":
        if args.connected:
            b = p + q + r
            if (b - len(mu) - len(nu)) % 2 or b < len(mu) + len(nu) - 2:
                value = Fraction(0)
            else:
                g = (b - len(mu) - len(nu) + 2) // 2
                value = hurwitz_connected_simple(mu, nu, g)
        else:
            value = hurwitz_disconnected(mu, nu, p, q, r)
    else:  # chamber
        ch = chamber_of(mu, nu)
        poly = chamber_polynomial("mixed", (p, q, r), ch)
        value = evaluate(poly, mu, nu)

    payload = {
        "input": {
            "type": args.type,
            "mu": list(mu),
            "nu": list(nu),
            "p": p,
            "q": q,
            "r": r,
            "connected": bool(args.connected),
        },
        "method": args.method,
        "value": _rat(value),
    }
    _emit(payload, args.out)
    return EXIT_OK


def _poly_json(poly) -> list:
    names = poly.ring.names
    terms = []
    for exps, coeff in poly.sorted_terms():
        terms.append(
            {"exps": {v: e for v, e in zip(names, exps)}, "coeff": _rat(coeff)}
        )
    return terms


def cmd_chamber_poly(args) -> int:
    if ":" not in args.sample:
        raise _UsageError("--sample wants M1,M2,..:N1,N2,..")
    left, right = args.sample.split(":", 1)
    mu, nu = _parts(left), _parts(right)
    if len(mu) != args.m or len(nu) != args.n:
        raise _UsageError(
            f"--sample has shape ({len(mu)},{len(nu)}), flags say ({args.m},{args.n})"
        )
    sig = _signature(args)
    signature = sig if args.type == "mixed" else sig[0]
    ch = chamber_of(mu, nu)
    poly = chamber_polynomial(args.type, signature, ch)
    payload = {
        "chamber": {
            "sample": {"mu": list(mu), "nu": list(nu)},
            "signs": [
                {"I": list(w.I), "J": list(w.J), "sign": ch.sign(w)}
                for w in walls(args.m, args.n)
            ],
        },
        "polynomial": _poly_json(poly),
        "degree": poly.total_degree(),
    }
    _emit(payload, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite in ("equality", "conventions"):
        kwargs = {"dmax": args.dmax, "bmax": args.bmax}
    elif args.suite == "tau":
        kwargs = {"nmax": min(args.dmax, 4), "emax": min(args.bmax, 3)}
    elif args.suite == "constant-term" and args.g is not None:
        kwargs = {"g": args.g}
    report = verify_mod.run_suite(args.suite, **kwargs)
    status = "PASS" if report["ok"] else "FAIL"
    print(f"suite {args.suite}: {status} ({report['count']} instances, "
          f"{len(report['failures'])} failures)", file=sys.stderr)
    for line in report["failures"]:
        print(f"  FAIL {line}", file=sys.stderr)
    _emit(report, args.out)
    return EXIT_OK if report["ok"] else EXIT_MISMATCH


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hurwitz",
        description="Exact double Hurwitz numbers: enumeration, character sums, chamber polynomials.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="one Hurwitz number, by the chosen method")
    pc.add_argument("--type", required=True, choices=PURE_KINDS + ("mixed",))
    pc.add_argument("--mu", required=True)
    pc.add_argument("--nu", required=True)
    pc.add_argument("--g", type=int)
    pc.add_argument("--p", type=int)
    pc.add_argument("--q", type=int)
    pc.add_argument("--r", type=int)
    pc.add_argument("--method", required=True, choices=("oracle", "character", "chamber"))
    pc.add_argument("--connected", action="store_true")
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_compute)

    pp = sub.add_parser("chamber-poly", help="the chamber polynomial at a sample point")
    pp.add_argument("--type", required=True, choices=PURE_KINDS + ("mixed",))
    pp.add_argument("--g", type=int)
    pp.add_argument("--p", type=int)
    pp.add_argument("--q", type=int)
    pp.add_argument("--r", type=int)
    pp.add_argument("--m", type=int, required=True)
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--sample", required=True)
    pp.add_argument("--out")
    pp.set_defaults(func=cmd_chamber_poly)

    pv = sub.add_parser("verify", help="run one verification suite")
    pv.add_argument("--suite", required=True, choices=sorted(verify_mod.SUITES))
    pv.add_argument("--dmax", type=int, default=5)
    pv.add_argument("--bmax", type=int, default=4)
    pv.add_argument("--g", type=int)
    pv.add_argument("--out")
    pv.set_defaults(func=cmd_verify)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except OnWall as e:
        print(f"error: sample lies on a wall: {e}", file=sys.stderr)
        return EXIT_ON_WALL
    except BoundExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND
    except DegenerateSignature as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeMismatch, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
