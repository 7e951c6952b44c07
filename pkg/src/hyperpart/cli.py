"""Command-line front end: ``hyperpart {count,series,vector,bounds,verify}``.

Exit codes: 0 ok, 1 verification failure or cache conflict, 2 budget
exhausted, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import enumeration as en
from .bounds import constants, verify_suite
from .cache import CacheConflict, ResultCache
from .series import (
    macmahon_numbers,
    partition_numbers_oracle,
    vector_partition_diagonal,
    vector_partition_table,
)

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64

log = logging.getLogger("hyperpart")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_range(text: str) -> list[int]:
    """``6`` or ``0..9`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}") from None


def _emit_rows(header: list[str], rows: list[list], fmt: str, text_rows=None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], sort_keys=True)
    if text_rows is not None:
        return text_rows
    return "\n".join(" ".join(str(x) for x in r) for r in rows)


_COUNTERS = {
    "p": lambda d, i, a: en.count_p(d, i, a.budget, a.jobs),
    "ptilde": lambda d, i, a: en.count_p_tilde(d, i, a.budget, a.jobs),
    "a": lambda d, i, a: en.count_a(d, i, a.budget),
    "b": lambda d, i, a: en.count_b(d, i, a.budget),
    "chv": lambda d, i, a: en.count_by_corner_hook(d, i, a.budget),
    "cvec": lambda d, i, a: en.count_by_cvector(d, i, a.budget),
}


def cmd_count(args) -> int:
    fam = args.family
    if fam in ("a", "b"):
        if args.k is None:
            raise UsageError(f"--family {fam} needs --k")
        indices = args.k
    elif fam == "cvec":
        if args.target is None:
            raise UsageError("--family cvec needs --target")
        if len(args.target) != args.d:
            raise UsageError("--target must have d entries")
        indices = [args.target]
    else:
        if args.n is None:
            raise UsageError(f"--family {fam} needs --n")
        indices = args.n
    if fam == "b" and min(indices) < 1:
        raise UsageError("--family b needs k >= 1")

    cache = None if args.no_cache else ResultCache(args.cache_dir)
    rows = []
    for index in indices:
        value = None
        if cache is not None and not args.recompute:
            value = cache.get(fam, args.d, index)
        if value is None:
            value = _COUNTERS[fam](args.d, index, args)
            if cache is not None:
                cache.put(fam, args.d, index, value)
        idx = ",".join(map(str, index)) if isinstance(index, tuple) else index
        rows.append([fam, args.d, idx, value])

    if args.format == "json":
        out = json.dumps([
            {"family": f, "d": d, "index": i, "value": str(v)} for f, d, i, v in rows
        ], sort_keys=True)
    else:
        text = "\n".join(str(r[3]) if len(rows) == 1 else f"{r[2]} {r[3]}" for r in rows)
        out = _emit_rows(["family", "d", "index", "value"], rows, args.format, text)
    print(out)
    return EXIT_OK


def cmd_series(args) -> int:
    if args.kind == "macmahon":
        if args.d is None:
            raise UsageError("--kind macmahon needs --d")
        s = macmahon_numbers(args.d, args.order)
    else:
        s = partition_numbers_oracle(args.order)
    if args.format == "json":
        print(json.dumps({
            "kind": args.kind, "d": args.d, "order": args.order,
            "coefficients": [str(c) for c in s],
        }, sort_keys=True))
    elif args.format == "csv":
        print(_emit_rows(["n", "value"], [[n, c] for n, c in enumerate(s)], "csv"))
    else:
        print(",".join(str(c) for c in s))
    return EXIT_OK


def cmd_vector(args) -> int:
    if (args.caps is None) == (args.diagonal is None):
        raise UsageError("give exactly one of --caps or --diagonal")
    if args.diagonal is not None:
        value = vector_partition_diagonal(args.d, args.diagonal)
        if args.format == "json":
            print(json.dumps({"d": args.d, "diagonal": args.diagonal, "value": str(value)},
                             sort_keys=True))
        elif args.format == "csv":
            print(_emit_rows(["d", "n", "value"], [[args.d, args.diagonal, value]], "csv"))
        else:
            print(value)
        return EXIT_OK
    if len(args.caps) != args.d:
        raise UsageError("--caps must have d entries")
    table = vector_partition_table(args.d, args.caps)
    header = [f"n{i}" for i in range(1, args.d + 1)] + ["value"]
    if args.format == "json":
        print(json.dumps({
            "d": args.d, "caps": list(args.caps),
            "values": [{"index": list(i), "value": str(v)} for i, v in table.items()],
        }, sort_keys=True))
    elif args.format == "csv":
        print(_emit_rows(header, [list(i) + [v] for i, v in table.items()], "csv"))
    elif args.d == 2:
        # text: grid with rows n1 and columns n2
        width = args.caps[1] + 1
        vals = list(table.values)
        print("\n".join(",".join(str(v) for v in vals[r * width:(r + 1) * width])
                        for r in range(args.caps[0] + 1)))
    else:
        print("\n".join(" ".join(map(str, list(i) + [v])) for i, v in table.items()))
    return EXIT_OK


def cmd_bounds(args) -> int:
    if (args.d is None) == (args.d_range is None):
        raise UsageError("give exactly one of --d or --d-range")
    ds = [args.d] if args.d is not None else args.d_range
    if min(ds) < 1:
        raise UsageError("d must be >= 1")
    header = ["d", "zeta", "gamma", "beta", "alpha", "delta_lower", "alpha_gt_gamma"]
    rows = []
    for d in ds:
        c = constants(d)
        above = c.gamma.definitely_less(c.alpha)
        rows.append([d, c.zeta_value.value, c.gamma.value, c.beta.value,
                     c.alpha.value, c.delta_lower.value, above])
    if args.format == "json":
        print(json.dumps([constants(d).as_dict() | {"alpha_gt_gamma": r[-1]}
                          for d, r in zip(ds, rows)], sort_keys=True))
    elif args.format == "csv":
        print(_emit_rows(header, [r[:-1] + [str(r[-1]).lower()] for r in rows], "csv"))
    else:
        lines = ["d  zeta(d+1)   gamma     beta      alpha     delta_lb  alpha>gamma"]
        for r in rows:
            lines.append(f"{r[0]:<2d} {r[1]:.8f}  {r[2]:.6f}  {r[3]:.6f}  {r[4]:.6f}  "
                         f"{r[5]:.6f}  {'yes' if r[6] else 'no'}")
        print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suite(args.d, args.n_max, args.k_max, args.budget)
    print(report.to_json() if args.format == "json" else report.to_text()
          if args.format == "text" else _report_csv(report))
    return EXIT_OK if report.passed else EXIT_FAIL


def _report_csv(report) -> str:
    rows = [[i.name, json.dumps(i.params, sort_keys=True), i.lhs, i.relation, i.rhs,
             i.verdict, i.error_bound] for i in report.instances]
    return _emit_rows(["instance", "params", "lhs", "relation", "rhs", "verdict",
                       "error_bound"], rows, "csv")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperpart", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, budget=False):
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        if budget:
            p.add_argument("--budget", type=int, default=en.DEFAULT_BUDGET,
                           help="maximum search nodes (default 1e8)")

    p = sub.add_parser("count", help="exact counts p, ptilde, a, b, chv, cvec")
    p.add_argument("--family", choices=sorted(_COUNTERS), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=_int_range)
    p.add_argument("--k", type=_int_range)
    p.add_argument("--target", type=_int_vector, help="c-vector for --family cvec")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--recompute", action="store_true",
                   help="ignore cached values but check them against the new result")
    common(p, budget=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="MacMahon numbers or partition numbers")
    p.add_argument("--kind", choices=["macmahon", "partitions"], required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--order", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("vector", help="vector partition numbers")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--caps", type=_int_vector)
    p.add_argument("--diagonal", type=int)
    common(p)
    p.set_defaults(func=cmd_vector)

    p = sub.add_parser("bounds", help="growth constants alpha, beta, gamma")
    p.add_argument("--d", type=int)
    p.add_argument("--d-range", type=_int_range)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run the finite inequality suite")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    common(p, budget=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        for name in ("d", "order", "n_max", "k_max", "diagonal", "jobs", "budget"):
            val = getattr(args, name, None)
            if val is not None and val < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hyperpart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"hyperpart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except en.BudgetExceeded as exc:
        print(f"hyperpart: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CacheConflict as exc:
        print(f"hyperpart: cache conflict: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
