"""Command-line surface: tables, statistic counts, bijections, verification.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
budget exceeded, 4 domain error (input outside a bijection's domain).  The
environment variable ``WREATH_EULER_BUDGET`` overrides the default element
budget; an explicit ``--budget`` flag wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    ColoredPermutation,
    DomainError,
    ParseError,
    format_cycles,
    format_one_line,
    parse_cycles,
    parse_one_line,
    rotate_left,
    rotate_right,
)
from . import bijections as bij
from .enumeration import (
    SUITES,
    BudgetError,
    distribution,
    verify_suite,
)
from .reporting import report_json
from .statistics import CIRCULAR, LINEAR, SKEW_LINEAR
from .tables import FLAVORS, build_table

_STATS = {"circ": CIRCULAR, "lin": LINEAR, "skew": SKEW_LINEAR}


def _resolve_budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("WREATH_EULER_BUDGET")
    return int(env) if env else None


def _cmd_table(args) -> int:
    table = build_table(args.colors, args.max_n, args.flavor)
    if args.format == "csv":
        print("n,m,value")
        for n in range(args.max_n + 1):
            for m in range(n + 1):
                print(f"{n},{m},{table.entry(n, m)}")
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "ell": table.ell,
                    "flavor": table.flavor,
                    "rows": [list(row) for row in table.rows],
                }
            )
        )
    else:
        for n in range(args.max_n + 1):
            print(f"n={n}: " + " ".join(str(v) for v in table.row(n)))
    return 0


def _cmd_count(args) -> int:
    kind = _STATS[args.stat]
    dist = distribution(
        args.colors,
        args.n,
        args.k,
        kind,
        jobs=args.jobs,
        budget=_resolve_budget(args),
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "ell": dist.ell,
                    "n": dist.n,
                    "k": dist.k,
                    "stat": args.stat,
                    "counts": [str(c) for c in dist.counts],
                }
            )
        )
    else:
        print(" ".join(str(c) for c in dist.counts))
    return 0


def _parse_input(text: str, ell: int, n: int | None) -> tuple[ColoredPermutation, bool]:
    text = text.strip()
    if text.startswith("("):
        return parse_cycles(text, ell, n), True
    return parse_one_line(text, ell, n), False


def _format_output(p: ColoredPermutation, as_cycles: bool) -> str:
    return format_cycles(p) if as_cycles else format_one_line(p)


def _cmd_bijection(args) -> int:
    ell = args.colors
    p, as_cycles = _parse_input(args.input, ell, args.n if args.name not in
                                ("vartheta", "drec3") else None)

    def need(flag, value):
        if value is None:
            raise DomainError(f"--{flag} is required for --name {args.name}")
        return value

    name, inverse = args.name, args.inverse
    extra: dict = {}
    if name == "delta":
        out = rotate_left(p) if inverse else rotate_right(p)
    elif name == "foata":
        if any(p.colors):
            raise DomainError("the plain cycles-to-word map needs an uncolored input")
        word = bij.foata_inverse(p.sigma) if inverse else bij.foata(p.sigma)
        out = ColoredPermutation(ell, word, (0,) * p.n)
    elif name == "phi":
        out = bij.colored_foata_inverse(p) if inverse else bij.colored_foata(p)
    elif name == "rho":
        m, k = need("m", args.m), need("k", args.k)
        out = (
            bij.insert_max_succession(p, m, k)
            if inverse
            else bij.remove_max_succession(p, m, k)
        )
    elif name == "isolated-to-increasing":
        m = need("m", args.m)
        out = (
            bij.increasing_to_isolated(p, m)
            if inverse
            else bij.isolated_to_increasing(p, m)
        )
    elif name == "representative":
        if inverse:
            raise DomainError("the class representative map has no inverse")
        out = bij.class_representative(p, need("m", args.m))
    elif name == "vartheta":
        m = need("m", args.m)
        if inverse:
            out = bij.isolate_inverse(need("eps", args.eps), need("alpha", args.alpha), p, m)
        else:
            eps, alpha, out = bij.isolate_forward(p, m, need("n", args.n))
            extra = {"eps": eps, "alpha": alpha}
    elif name == "tau":
        if inverse:
            eps, k, out = bij.derangement_remove(p)
            extra = {"eps": eps, "k": k}
        else:
            out = bij.derangement_insert(need("eps", args.eps), need("k", args.k), p)
    elif name == "drec3":
        m = need("m", args.m)
        if inverse:
            eps, alpha, out = bij.isolated_remove(p, m, need("n", args.n))
            extra = {"eps": eps, "alpha": alpha}
        else:
            out = bij.isolated_insert(need("eps", args.eps), need("alpha", args.alpha), p, m)
    else:
        raise DomainError(f"unknown bijection name {args.name!r}")

    rendered = _format_output(out, as_cycles)
    if extra:
        print(json.dumps({**extra, "perm": rendered}))
    else:
        print(rendered)
    return 0


def _cmd_verify(args) -> int:
    results = verify_suite(
        args.suite,
        args.colors_max,
        args.n_max,
        jobs=args.jobs,
        budget=_resolve_budget(args),
    )
    print(report_json(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathperm",
        description="Colored permutation groups: difference tables, succession "
        "statistics, bijections, and brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print a difference table")
    t.add_argument("--flavor", choices=FLAVORS, required=True)
    t.add_argument("--colors", type=int, required=True)
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--format", choices=("csv", "json", "text"), default="text")
    t.set_defaults(func=_cmd_table)

    c = sub.add_parser("count", help="distribution of a succession statistic")
    c.add_argument("--colors", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--stat", choices=sorted(_STATS), required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--budget", type=int, default=None)
    c.set_defaults(func=_cmd_count)

    b = sub.add_parser("bijection", help="apply a named bijection to one element")
    b.add_argument(
        "--name",
        required=True,
        choices=(
            "delta",
            "foata",
            "phi",
            "rho",
            "isolated-to-increasing",
            "representative",
            "vartheta",
            "tau",
            "drec3",
        ),
    )
    b.add_argument("--colors", type=int, default=1)
    b.add_argument("--n", type=int, default=None)
    b.add_argument("--m", type=int, default=None)
    b.add_argument("--k", type=int, default=None)
    b.add_argument("--eps", type=int, default=None, help="color exponent argument")
    b.add_argument("--alpha", type=int, default=None, help="anchor value argument")
    b.add_argument("--input", required=True, help="one-line word or (cycles)")
    b.add_argument("--inverse", action="store_true")
    b.set_defaults(func=_cmd_bijection)

    v = sub.add_parser("verify", help="run brute-force verification suites")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--colors-max", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--budget", type=int, default=None)
    v.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
