"""Command line front end.

    quasidedekind compute T 2 5 3
    quasidedekind verify --identities theorem-1,theorem-2 --p-max 8 --a-max 25
    quasidedekind table --p-list 1,2,3,4,5 --pairs 5:3,3:5 --format csv --out ex1.csv
    quasidedekind fourier 1 1/3 --terms 10000

Exit status: 0 on success, 1 if any identity fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import sums
from .calculus import fourier_approximation
from .exact import format_rational
from .verify import IDENTITIES, SweepConfig, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_FIELDS = ("p", "a", "b", "T", "S", "lhs", "rhs", "holds")


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _pair_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    for item in text.split(","):
        if not item.strip():
            continue
        a, b = item.split(":")
        pairs.append((int(a), int(b)))
    return pairs


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_compute(args) -> int:
    arity = {"T": 3, "S": 3, "rho": 2}[args.kind]
    if len(args.params) != arity:
        raise sums.PreconditionError(f"{args.kind} takes {arity} integer arguments, got {len(args.params)}")
    if args.kind == "T":
        p, a, b = args.params
        value = sums.apostol_dedekind_T(p, a, b)
        record = {"kind": "T", "p": p, "a": a, "b": b}
    elif args.kind == "S":
        p, a, b = args.params
        value = sums.generalized_dedekind_S(p, a, b)
        record = {"kind": "S", "p": p, "a": a, "b": b}
    else:
        a, b = args.params
        value = sums.rho(a, b)
        record = {"kind": "rho", "a": a, "b": b}
    print(format_rational(value))
    if args.json:
        record["value"] = format_rational(value)
        print(json.dumps(record))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.identities.split(",") if args.identities else list(IDENTITIES)
    unknown = [n for n in names if n not in IDENTITIES]
    if unknown:
        raise sums.PreconditionError(f"unknown identities: {', '.join(unknown)}")
    cfg = SweepConfig(
        p_max=args.p_max,
        a_max=args.a_max,
        b_max=args.b_max,
        q_max=args.q_max,
        fourier_terms=args.fourier_terms,
        seed=args.seed,
        parallelism=args.parallelism,
    )
    reports = run_verification(names, cfg)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.identity}: {r.instances} instances, {len(r.failures)} failures", file=sys.stderr)
    _write(json.dumps([r.to_json() for r in reports], indent=2) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def table_rows(p_list: list[int], pairs: list[tuple[int, int]]) -> list[dict]:
    rows = []
    for p in p_list:
        for a, b in pairs:
            row = {"p": p, "a": a, "b": b, "T": format_rational(sums.apostol_dedekind_T(p, a, b))}
            row["S"] = format_rational(sums.generalized_dedekind_S(p, a, b)) if p >= 1 else None
            if p >= 1 and a % 2 and b % 2 and math.gcd(a, b) == 1:
                rep = sums.reciprocity_sides(p, a, b)
                row.update(lhs=format_rational(rep.lhs), rhs=format_rational(rep.rhs), holds=rep.holds)
            else:
                row.update(lhs=None, rhs=None, holds=None)
            rows.append(row)
    return rows


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"

    lines = [",".join(TABLE_FIELDS)]
    for row in rows:
        cells = []
        for key in TABLE_FIELDS:
            v = row[key]
            if v is None:
                cells.append("")
            elif key in ("T", "S", "lhs", "rhs"):
                cells.append(f'"{v}"')  # rationals travel as quoted strings
            elif key == "holds":
                cells.append("true" if v else "false")
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    rows = table_rows(_int_list(args.p_list), _pair_list(args.pairs))
    text = render_table(rows, args.format)
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_fourier(args) -> int:
    approx = fourier_approximation(args.p, Fraction(args.x), args.terms)
    record = {
        "p": approx.p,
        "x": format_rational(approx.x),
        "terms": approx.terms,
        "approx": approx.value,
        "exact": format_rational(approx.exact),
        "abs_error": approx.abs_error,
    }
    print(json.dumps(record))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasidedekind", description="Exact Apostol-Dedekind sums with quasi-periodic Euler functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate T_p(a,b), S_p(a,b) or rho(a,b) exactly")
    p.add_argument("kind", choices=("T", "S", "rho"))
    p.add_argument("params", type=int, nargs="+", help="p a b (T, S) or a b (rho)")
    p.add_argument("--json", action="store_true", help="also print a JSON record")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run identity sweeps")
    p.add_argument("--identities", default=None, help=f"comma list from: {','.join(IDENTITIES)} (default: all)")
    p.add_argument("--p-max", type=int, default=8)
    p.add_argument("--a-max", type=int, default=25)
    p.add_argument("--b-max", type=int, default=None, help="defaults to --a-max")
    p.add_argument("--q-max", type=int, default=9)
    p.add_argument("--fourier-terms", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="write a table of T, S and reciprocity values")
    p.add_argument("--p-list", default="1,2,3,4,5")
    p.add_argument("--pairs", default="", help="comma list of a:b pairs, e.g. 5:3,3:5")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fourier", help="Fourier partial sum of Ebar_p at x")
    p.add_argument("p", type=int)
    p.add_argument("x", help="rational, e.g. 1/3")
    p.add_argument("--terms", type=int, default=10_000)
    p.set_defaults(func=cmd_fourier)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
