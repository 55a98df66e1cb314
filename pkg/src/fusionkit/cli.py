"""Command-line surface: coefficient queries, tables, verification sweeps.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 unsupported shape.  Output is deterministic byte-for-byte for fixed
arguments.  Set FUSIONKIT_TRACE=1 to stream bracket words of every
involution step to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .coefficients import (
    UnsupportedShape,
    fusion_oracle,
    fusion_rule,
    fusion_tableaux,
    lr_lattice,
    lr_paths,
)
from .involutions import is_k_fusion
from .partitions import (
    FusionContext,
    conjugate,
    format_partition,
    is_restricted,
    parse_partition,
    restricted_partitions_of,
)
from .paths import enumerate_paths
from .verify import SUITES, run_suite
from .words import pair_word, render

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_UNSUPPORTED = 3


class _InputError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _cmd_lr(args) -> int:
    la, mu, nu = (_partition_arg(t) for t in (args.la, args.mu, args.nu))
    fn = lr_lattice if args.method == "lattice" else lr_paths
    print(fn(la, mu, nu))
    return EXIT_OK


def _cmd_fusion(args) -> int:
    la, mu, nu = (_partition_arg(t) for t in (args.la, args.mu, args.nu))
    ctx = FusionContext(args.n, args.k)
    for name, p in (("lambda", la), ("mu", mu), ("nu", nu)):
        if not is_restricted(p, ctx):
            raise _InputError(
                f"{name} = {format_partition(p)} is not ({ctx.n},{ctx.k})-restricted"
            )
    fn = {"rule": fusion_rule, "oracle": fusion_oracle, "tableaux": fusion_tableaux}[
        args.method
    ]
    value = fn(la, mu, nu, ctx)
    print(value)
    if args.explain:
        _explain(la, mu, nu, ctx)
    return EXIT_OK


def _explain(la, mu, nu, ctx) -> None:
    """List the counted paths, with bracket words where two blocks exist."""
    if mu and mu[0] > 2:
        print("# explanation available only for shapes with at most two columns")
        return
    mu_conj = conjugate(mu)
    for path in enumerate_paths(la, nu, mu_conj, ctx):
        if mu and mu[0] == 2 and len(mu) < ctx.n:
            if not is_k_fusion(path, ctx, mu):
                continue
            print(f"# labels {path.labels()}  word {render(pair_word(path, 1))}")
        else:
            print(f"# labels {path.labels()}")


def _cmd_table(args) -> int:
    mu = _partition_arg(args.mu)
    ctx = FusionContext(args.n, args.k)
    if not is_restricted(mu, ctx):
        raise _InputError(f"mu = {format_partition(mu)} is not restricted")
    rows = []
    for la_size in range(0, args.max_size + 1):
        for la in restricted_partitions_of(la_size, ctx):
            from .coefficients import fusion_expand

            for nu, value in sorted(fusion_expand(la, mu, ctx).items()):
                rows.append(
                    {
                        "lambda": format_partition(la),
                        "mu": format_partition(mu),
                        "nu": format_partition(nu),
                        "n": ctx.n,
                        "k": ctx.k,
                        "N": value,
                    }
                )
    rows.sort(key=lambda r: (r["lambda"], r["nu"]))
    if args.format == "json":
        print(json.dumps({"schema": "fusionkit.table/1", "rows": rows}, indent=2, sort_keys=True))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["lambda", "mu", "nu", "n", "k", "N"])
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    report = run_suite(
        args.suite,
        n_max=args.n_max,
        k_max=args.k_max,
        size_max=args.size_max,
        jobs=jobs,
    )
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionkit",
        description="Exact sl(n) level-k fusion coefficients by path counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lr = sub.add_parser("lr", help="classical Littlewood-Richardson coefficient")
    p_lr.add_argument("la")
    p_lr.add_argument("mu")
    p_lr.add_argument("nu")
    p_lr.add_argument("--method", choices=["paths", "lattice"], default="paths")
    p_lr.set_defaults(fn=_cmd_lr)

    p_f = sub.add_parser("fusion", help="level-k fusion coefficient")
    p_f.add_argument("la")
    p_f.add_argument("mu")
    p_f.add_argument("nu")
    p_f.add_argument("--n", type=int, required=True)
    p_f.add_argument("--k", type=int, required=True)
    p_f.add_argument("--method", choices=["rule", "oracle", "tableaux"], default="rule")
    p_f.add_argument("--explain", action="store_true")
    p_f.set_defaults(fn=_cmd_fusion)

    p_t = sub.add_parser("table", help="all nonzero coefficients for a fixed mu")
    p_t.add_argument("--n", type=int, required=True)
    p_t.add_argument("--k", type=int, required=True)
    p_t.add_argument("--mu", required=True)
    p_t.add_argument("--max-size", type=int, default=6)
    p_t.add_argument("--format", choices=["json", "csv"], default="json")
    p_t.set_defaults(fn=_cmd_table)

    p_v = sub.add_parser("verify", help="run a verification sweep")
    p_v.add_argument("--suite", choices=list(SUITES), default="all")
    p_v.add_argument("--n-max", type=int, default=3)
    p_v.add_argument("--k-max", type=int, default=2)
    p_v.add_argument("--size-max", type=int, default=6)
    p_v.add_argument("--jobs", type=int, default=0, help="0 means all cores")
    p_v.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except UnsupportedShape as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
