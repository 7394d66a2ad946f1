"""Command-line front end.

Four subcommands:

    run    evaluate a program file under a chosen clocked semantics
    trace  print the small-step configuration trace of a program
    check  run property campaigns and print one JSON report per line
    parse  parse a program and print its pretty-printed form

Machine-readable JSON goes to stdout (one object per line); trace
configuration lines are the one plain-text exception.  Human-facing
messages go to stderr.  Exit codes: 0 for success / all properties
passing, 2 for timeout, not-found, step-limit, or failing properties,
1 for parse and usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .imp import Com, Store, pretty
from .parser import ParseError, parse_com
from .smallstep import Terminated, iter_trace, run_oracle
from .testkit import (
    ENV_SEMANTICS,
    PROPERTY_IDS,
    SEMANTICS,
    GenConfig,
    fuel_search,
    run_property,
)

_SEM_CHOICES = ("ev", "ev-min", "cval", "cval-guard", "cval-tick")
_DEFAULT_SEED = 42
_DEFAULT_CAP = 10_000

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TIMEOUT = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this CLI reserves 2 for timeouts."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    top = _ArgumentParser(prog="clockwork", description=__doc__.split("\n\n")[0])
    sub = top.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    run_p = sub.add_parser("run", help="evaluate a program under a clocked semantics")
    run_p.add_argument("file", help="program file (.imp)")
    run_p.add_argument("--sem", required=True, choices=_SEM_CHOICES, help="semantics to use")
    run_p.add_argument("--fuel", required=True, help="initial fuel N, or search:MAX for a doubling search")
    run_p.add_argument("--init", default="", help="initial store, e.g. x=3,y=1")
    run_p.add_argument("--oracle", action="store_true", help="also run the small-step oracle")
    run_p.add_argument("--cap", type=int, default=_DEFAULT_CAP, help="oracle step cap")

    trace_p = sub.add_parser("trace", help="print the small-step trace")
    trace_p.add_argument("file")
    trace_p.add_argument("--init", default="")
    trace_p.add_argument("--cap", type=int, default=_DEFAULT_CAP, help="step cap")

    check_p = sub.add_parser("check", help="run property campaigns")
    check_p.add_argument("properties", nargs="*", metavar="PROP", help="property ids (P1..P10, RT)")
    check_p.add_argument("--all", action="store_true", help="run every property")
    check_p.add_argument("--seed", type=int, default=None, help="campaign seed (default: $CLOCKWORK_SEED or 42)")
    check_p.add_argument("--cases", type=int, default=1000, help="cases per property")

    parse_p = sub.add_parser("parse", help="parse a program and pretty-print it")
    parse_p.add_argument("file")
    return top


def _load_program(path: str) -> Com:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"clockwork: cannot read {path}: {e}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    try:
        return parse_com(text)
    except ParseError as e:
        print(f"{path}:{e}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_init(spec: str) -> Store:
    bindings: dict[str, int] = {}
    if spec:
        for item in spec.split(","):
            name, eq, value = item.partition("=")
            name = name.strip()
            try:
                if not eq:
                    raise ValueError("missing '='")
                bindings[name] = int(value.strip())
            except ValueError as e:
                print(f"clockwork: bad --init binding {item!r}: {e}", file=sys.stderr)
                raise SystemExit(EXIT_USAGE)
    try:
        return Store(bindings)
    except ValueError as e:
        print(f"clockwork: bad --init: {e}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_fuel(spec: str) -> tuple[Optional[int], Optional[int]]:
    """Returns (exact_fuel, search_max); exactly one is set."""
    if spec.startswith("search:"):
        try:
            max_fuel = int(spec[len("search:"):])
            if max_fuel < 1:
                raise ValueError
        except ValueError:
            print(f"clockwork: bad --fuel search spec {spec!r}", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        return None, max_fuel
    try:
        fuel = int(spec)
        if fuel < 0:
            raise ValueError
    except ValueError:
        print(f"clockwork: bad --fuel {spec!r}: expected N or search:MAX", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return fuel, None


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _min_sufficient_fuel(fn, c: Com, s: Store, known_good: int) -> int:
    """Smallest fuel yielding a result, given one is known at `known_good`.

    Well-defined because success is upward-closed in fuel (P6).
    """
    lo, hi = 0, known_good
    while lo < hi:
        mid = (lo + hi) // 2
        if fn(c, s, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    return lo


def cmd_run(args: argparse.Namespace) -> int:
    com = _load_program(args.file)
    store = _parse_init(args.init)
    sem_key = args.sem.replace("-", "_")
    fn = SEMANTICS[sem_key]
    env_like = sem_key in ENV_SEMANTICS

    exact_fuel, search_max = _parse_fuel(args.fuel)
    report: dict[str, object] = {"semantics": args.sem}
    if search_max is not None:
        report["fuel_in"] = f"search:{search_max}"
        found = fuel_search(sem_key, com, store, search_max)
        if found is None:
            report["outcome"] = "not-found"
            result = None
            effective_fuel = None
        else:
            effective_fuel, result = found
    else:
        report["fuel_in"] = exact_fuel
        effective_fuel = exact_fuel
        result = fn(com, store, exact_fuel)
        if result is None:
            report["outcome"] = "timeout"

    if result is not None:
        report["outcome"] = "final"
        if env_like:
            final_store = result
            report["store"] = final_store.to_dict()
            report["fuel_consumed"] = _min_sufficient_fuel(fn, com, store, effective_fuel)
        else:
            final_store, leftover = result
            report["store"] = final_store.to_dict()
            report["leftover_fuel"] = leftover
            report["fuel_consumed"] = effective_fuel - leftover

    if args.oracle:
        if args.cap < 1:
            print("clockwork: --cap must be positive", file=sys.stderr)
            return EXIT_USAGE
        outcome = run_oracle(com, store, args.cap)
        report["oracle_steps"] = outcome.steps if isinstance(outcome, Terminated) else None

    _emit(report)
    return EXIT_OK if result is not None else EXIT_TIMEOUT


def cmd_trace(args: argparse.Namespace) -> int:
    com = _load_program(args.file)
    store = _parse_init(args.init)
    if args.cap < 1:
        print("clockwork: --cap must be positive", file=sys.stderr)
        return EXIT_USAGE
    count = -1
    last = None
    for cfg in iter_trace(com, store, args.cap):
        print(cfg.render())
        count += 1
        last = cfg
    if last is not None and last.is_terminal():
        print(f"steps: {count}")
        return EXIT_OK
    print(f"step-limit: {args.cap}")
    return EXIT_TIMEOUT


def cmd_check(args: argparse.Namespace) -> int:
    if args.all:
        ids: Sequence[str] = PROPERTY_IDS
    else:
        ids = args.properties
    if not ids:
        print("clockwork: nothing to check; give property ids or --all", file=sys.stderr)
        return EXIT_USAGE
    for pid in ids:
        if pid not in PROPERTY_IDS:
            print(f"clockwork: unknown property id {pid!r} (known: {', '.join(PROPERTY_IDS)})", file=sys.stderr)
            return EXIT_USAGE
    if args.cases < 0:
        print("clockwork: --cases must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    seed = args.seed
    if seed is None:
        try:
            seed = int(os.environ.get("CLOCKWORK_SEED", _DEFAULT_SEED))
        except ValueError:
            print("clockwork: CLOCKWORK_SEED must be an integer", file=sys.stderr)
            return EXIT_USAGE
    cfg = GenConfig(seed=seed)
    all_passed = True
    for pid in ids:
        report = run_property(pid, cfg, args.cases)
        _emit(report.to_json_dict())
        all_passed = all_passed and report.passed
    return EXIT_OK if all_passed else EXIT_TIMEOUT


def cmd_parse(args: argparse.Namespace) -> int:
    com = _load_program(args.file)
    _emit({"pretty": pretty(com)})
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "run": cmd_run,
        "trace": cmd_trace,
        "check": cmd_check,
        "parse": cmd_parse,
    }[args.command]
    try:
        return handler(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
