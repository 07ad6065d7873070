"""Command-line interface: table, sequence, bijection, enumerate, verify.

Exit codes: 0 all good, 1 verification failure, 2 usage error.  Environment
variables PATCLASS_ORDER and PATCLASS_JOBS override the default series
truncation order and worker count.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import permutations as _permutations
from math import factorial

from . import classes, dyck, report, series
from .classes import AV123, AV132, AvoidanceBasis
from .perms import count_occurrences, format_perm, parse_perm

USAGE_ERROR = 2

DEFAULT_ORDER = int(os.environ.get("PATCLASS_ORDER", "100"))
DEFAULT_JOBS = int(os.environ.get("PATCLASS_JOBS", "1"))

_BRUTE_LIMIT = 12
_UNIFORM_BRUTE_LIMIT = 8


class UsageError(Exception):
    pass


def render_table(family: str, n_max: int, fmt: str, jobs: int = 1) -> str:
    rows = report.build_table(family, n_max, jobs=jobs)
    if fmt == "csv":
        lines = ["n,f123,f132,f213,f231,f312,f321"]
        lines += [",".join(str(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    payload = {"family": family,
               "rows": [{"n": r[0], "f123": r[1], "f132": r[2], "f213": r[3],
                         "f231": r[4], "f312": r[5], "f321": r[6]}
                        for r in rows]}
    return json.dumps(payload, indent=2) + "\n"


def _brute_value(name: str, n: int, k: int) -> int:
    if name == series.CATALAN:
        return classes.class_size(n, AV123)
    if n == 0:
        return 0
    if name == series.INDEC:
        return sum(1 for _ in classes.enumerate_indecomposable_avoiders(n, AV123))
    if name in (series.F12, series.F21):
        q = (1, 2) if name == series.F12 else (2, 1)
        return sum(count_occurrences(p, q)
                   for p in classes.enumerate_avoiders(n, AV123))
    if name in (series.A132, series.B231, series.D321):
        col = {series.A132: (1, 3, 2), series.B231: (2, 3, 1),
               series.D321: (3, 2, 1)}[name]
        return classes.class_pattern_totals(n, AV123, 3)[col]
    if name == series.ASTAR213:
        return classes.class_pattern_totals(n, AV123, 3,
                                            indecomposable=True)[(2, 1, 3)]
    if name == series.BONA231_132:
        return classes.class_pattern_totals(n, AV132, 3)[(2, 3, 1)]
    if name == series.UNIFORM_SN:
        if n > _UNIFORM_BRUTE_LIMIT:
            raise UsageError(f"uniform_sn brute force needs n <= {_UNIFORM_BRUTE_LIMIT}")
        pattern = tuple(range(1, k + 1))
        return sum(count_occurrences(p, pattern)
                   for p in _permutations(range(1, n + 1)))
    raise UsageError(f"no brute-force route for {name!r}")


def render_sequence(name: str, n_max: int, method: str, k: int = 3) -> str:
    """Tab-separated (n, value) lines by the requested route."""
    if name not in series.SEQUENCE_IDS:
        raise UsageError(f"unknown sequence id {name!r}")
    lines = []
    if method == "brute":
        if n_max > _BRUTE_LIMIT:
            raise UsageError(f"brute force requires n_max <= {_BRUTE_LIMIT}")
        for n in range(n_max + 1):
            lines.append(f"{n}\t{_brute_value(name, n, k)}")
    elif method == "gf":
        s = series.named_series(name, n_max, k)
        for n in range(n_max + 1):
            lines.append(f"{n}\t{s.integer_coefficients()[n]}")
    elif method == "closed":
        try:
            start = {series.CATALAN: 0, series.INDEC: 1, series.F12: 2,
                     series.F21: 2, series.A132: 3, series.B231: 3,
                     series.D321: 3, series.UNIFORM_SN: 0}[name]
        except KeyError:
            raise UsageError(f"{name} has no closed form") from None
        for n in range(start, n_max + 1):
            lines.append(f"{n}\t{series.closed_form(name, n, k)}")
    else:
        raise UsageError(f"unknown method {method!r}")
    return "\n".join(lines) + "\n"


def render_bijection(text: str) -> str:
    p = parse_perm(text)
    try:
        g = dyck.grid_decompose(p)
    except dyck.Contains123Error:
        raise UsageError(f"{format_perm(p)} contains a 123 pattern; "
                         "the bijection needs a 123-avoider") from None
    except dyck.DecomposableError:
        raise UsageError(f"{format_perm(p)} is skew-decomposable; "
                         "the bijection needs an indecomposable permutation") from None
    path = dyck.phi(p)
    via_sp = dyck.occ213_via_sp(g)
    naive = count_occurrences(p, (2, 1, 3))
    lines = [
        f"permutation: {format_perm(p)}",
        f"path: {path.steps or '(empty)'}",
        "blue entries (position, value, sp): " + (
            ", ".join(f"({pos},{val},{s})"
                      for (pos, val), s in zip(g.blue, g.sp)) or "(none)"),
        f"sum of C(sp,2): {via_sp}",
        f"naive 213 count: {naive}",
    ]
    if via_sp != naive:
        lines.append("MISMATCH between the two 213 counts")
    return "\n".join(lines) + "\n"


def _parse_basis(text: str) -> AvoidanceBasis:
    return AvoidanceBasis.of(*text.split(","))


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="patclass",
        description="Pattern totals over 123/132-avoiding permutation classes")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="reproduce a class pattern table")
    p_table.add_argument("family", choices=["av123", "av132"])
    p_table.add_argument("--n-max", type=int, default=7)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--jobs", type=int, default=DEFAULT_JOBS)

    p_seq = sub.add_parser("sequence", help="print a named sequence")
    p_seq.add_argument("id", choices=list(series.SEQUENCE_IDS))
    p_seq.add_argument("--n-max", type=int, default=10)
    p_seq.add_argument("--method", choices=["brute", "gf", "closed"],
                       default="gf")
    p_seq.add_argument("--k", type=int, default=3,
                       help="pattern length for uniform_sn")

    p_bij = sub.add_parser("bijection", help="trace the staircase bijection")
    p_bij.add_argument("permutation")

    p_enum = sub.add_parser("enumerate", help="list avoiders")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--avoid", default="123",
                        help="comma-separated forbidden patterns")
    p_enum.add_argument("--indecomposable", action="store_true")

    p_ver = sub.add_parser("verify", help="run the verification suite")
    p_ver.add_argument("--n-max", type=int, default=10)
    p_ver.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_ver.add_argument("--jobs", type=int, default=DEFAULT_JOBS)
    p_ver.add_argument("--format", choices=["text", "json"], default="text")

    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            sys.stdout.write(render_table(args.family, args.n_max,
                                          args.format, args.jobs))
        elif args.command == "sequence":
            sys.stdout.write(render_sequence(args.id, args.n_max,
                                             args.method, args.k))
        elif args.command == "bijection":
            sys.stdout.write(render_bijection(args.permutation))
        elif args.command == "enumerate":
            basis = _parse_basis(args.avoid)
            stream = (classes.enumerate_indecomposable_avoiders(args.n, basis)
                      if args.indecomposable
                      else classes.enumerate_avoiders(args.n, basis))
            for p in stream:
                sys.stdout.write(format_perm(p) + "\n")
        elif args.command == "verify":
            if args.n_max > 12:
                raise UsageError("verify supports --n-max <= 12")
            if args.n_max > 10:
                sys.stderr.write(f"warning: --n-max {args.n_max} may take "
                                 "several minutes of brute force\n")
            rep = report.run_verification(args.n_max, args.order,
                                          jobs=args.jobs)
            if args.format == "json":
                sys.stdout.write(rep.to_json() + "\n")
            else:
                for line in rep.lines():
                    sys.stdout.write(line + "\n")
            return rep.exit_code
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
