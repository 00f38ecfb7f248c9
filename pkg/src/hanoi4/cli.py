"""Command-line entry point: ``hanoi4 {solve,bench,verify-classic,random,oracle}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .instance_io import (
    Instance,
    ParseError,
    classic_instance,
    emit_instance,
    emit_plan,
    load_instance,
)
from .oracle import DEFAULT_CAP, CapacityError, bfs_optimal, fs_argmins, fs_number
from .partitions import DEFAULT_ERROR_BOUND, Heuristic
from .plan4 import InputError, Status, solve_with_bound
from . import harness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_UNKNOWN = 3
EXIT_OVER_BOUND = 4
EXIT_RESOURCE = 5
EXIT_VERIFY = 6

STATUS_EXIT = {
    Status.SOLVED: EXIT_OK,
    Status.UNKNOWN: EXIT_UNKNOWN,
    Status.OVER_BOUND: EXIT_OVER_BOUND,
    Status.RESOURCE_LIMIT: EXIT_RESOURCE,
}


def _span(text: str) -> tuple[int, int]:
    """``"5"`` or ``"18..25"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if a > b or a < 0:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return a, b


def _heuristics(values: list[str] | None, default: list[Heuristic]) -> list[Heuristic]:
    if not values:
        return default
    out = []
    for v in values:
        for tok in v.split(","):
            if tok.strip():
                out.append(Heuristic.parse(tok))
    return out


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--error-bound", type=int, default=DEFAULT_ERROR_BOUND,
                   help="try estimates +/- this many disks (default %(default)s)")
    p.add_argument("--memo-cap", type=int, default=None,
                   help="abort with resource-limit after this many table entries")
    p.add_argument("--timeout", type=float, default=None, help="seconds per solve")


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        if args.classic is not None:
            inst = classic_instance(args.classic)
        elif args.instance:
            inst = load_instance(args.instance)
        else:
            print("solve: give an instance file or --classic N", file=sys.stderr)
            return EXIT_USAGE
        h = Heuristic.parse(args.heuristic)
        out = solve_with_bound(inst, h, args.error_bound, memo_cap=args.memo_cap, timeout=args.timeout)
    except (ParseError, InputError, OSError) as exc:
        print(f"parse-error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if out.plan is not None:
        _write(emit_plan(out.plan, inst), args.out)
    length = "-" if out.length is None else out.length
    print(
        f"status={out.status} len={length} bound={inst.max_steps} "
        f"memo_entries={out.stats.entries} elapsed={out.seconds:.4f}s",
        file=sys.stderr,
    )
    return STATUS_EXIT[out.status]


def _bench_instances(args: argparse.Namespace) -> list[Instance]:
    insts = [load_instance(p) for p in args.instances]
    if args.classic:
        lo, hi = args.classic
        insts += [classic_instance(n) for n in range(lo, hi + 1)]
    if args.random:
        insts += harness.random_instances(args.random, args.n_range, args.seed, args.steps_margin)
    if args.fs_style:
        insts += harness.fs_style_instances(args.fs_style, args.n_range, args.seed)
    return insts


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        insts = _bench_instances(args)
        heuristics = _heuristics(args.heuristic, list(harness.GUIDED))
    except (ParseError, OSError) as exc:
        print(f"parse-error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = harness.RunConfig(insts, heuristics, args.error_bound, args.memo_cap, args.timeout, args.jobs)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows, details = harness.run_bench(cfg)
    _write(harness.format_rows(rows, args.format), args.out)
    if args.details:
        Path(args.details).write_text(harness.format_rows(details, args.format), encoding="utf-8")
    return EXIT_OK


def cmd_verify_classic(args: argparse.Namespace) -> int:
    lines = harness.verify_classic(args.max_n, args.bfs_cap)
    for line in lines:
        print(line)
    failed = sum(not line.ok for line in lines)
    print(f"{len(lines) - failed} passed, {failed} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    guide = Heuristic.parse(args.heuristic)
    rows = harness.random_experiment(
        args.count, args.n_range, args.seed, guide, args.error_bound,
        args.memo_cap, args.timeout, args.bfs_cap,
    )
    if args.emit_dir:
        d = Path(args.emit_dir)
        d.mkdir(parents=True, exist_ok=True)
        for inst in harness.random_instances(args.count, args.n_range, args.seed):
            (d / f"{inst.source_name}.lp").write_text(emit_instance(inst), encoding="utf-8")
    _write(harness.format_rows(rows, args.format), args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.instance:
        try:
            inst = load_instance(args.instance)
            length, plan = bfs_optimal(inst.start, inst.goal, args.bfs_cap)
        except (ParseError, InputError, OSError) as exc:
            print(f"parse-error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        except CapacityError as exc:
            print(f"resource-limit: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
        if args.out:
            _write(emit_plan(plan, inst), args.out)
        print(f"bfs_optimal={length}")
        return EXIT_OK
    rows = [
        {"n": n, "fs_number": fs_number(n), "argmins": " ".join(map(str, fs_argmins(n)))}
        for n in range(0, args.max_n + 1)
    ]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print("n,fs_number,argmins")
        for r in rows:
            print(f"{r['n']},{r['fs_number']},{r['argmins']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hanoi4", description="4-peg Tower of Hanoi configuration solver")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance and write its plan")
    p.add_argument("instance", nargs="?", help="instance file")
    p.add_argument("--classic", type=int, metavar="N", help="use the classic N-disk tower 1 -> 4")
    p.add_argument("--heuristic", default=Heuristic.ROHL_GEDEON.value)
    _solver_flags(p)
    p.add_argument("--out", help="plan file (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="compare heuristics over a set of instances")
    p.add_argument("instances", nargs="*", help="instance files")
    p.add_argument("--heuristic", action="append", help="name or comma list; repeatable (default: the six guides)")
    p.add_argument("--classic", type=_span, metavar="LO..HI", help="add classic instances")
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="add uniform random instances")
    p.add_argument("--fs-style", type=int, default=0, metavar="COUNT",
                   help="add instances cut from classic Frame-Stewart traces")
    p.add_argument("--n-range", type=_span, default=(3, 8), metavar="LO..HI")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps-margin", type=Fraction, default=Fraction(2))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="report file (default stdout)")
    p.add_argument("--details", help="also write per-instance results here")
    _solver_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify-classic", help="check classic optimality for n = 1..MAX_N")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--bfs-cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify_classic)

    p = sub.add_parser("random", help="guided heuristic vs exhaustive on random configurations")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n-range", type=_span, default=(18, 25), metavar="LO..HI")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--heuristic", default=Heuristic.ROHL_GEDEON.value)
    p.add_argument("--bfs-cap", type=int, default=0, help="add BFS optimum for n <= this")
    p.add_argument("--emit-dir", help="also write the generated instance files here")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    _solver_flags(p)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("oracle", help="Frame-Stewart table, or BFS optimum of one instance")
    p.add_argument("instance", nargs="?")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--bfs-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write the BFS witness plan here")
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
