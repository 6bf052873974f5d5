"""Command-line interface.

    chowcalc verify [--only id,...] [--format text|json] [--trunc D] [--config FILE]
    chowcalc eval [--defs FILE] [--trunc D] EXPR
    chowcalc repl [--defs FILE] [--trunc D]

Exit codes: 0 all selected checks pass / expression evaluated; 1 some check
failed; 2 usage, parse, or evaluation error.  Configuration comes only from
flags and the optional key=value config file; environment variables are
never consulted, so runs are reproducible.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks
from .evaluator import EvalError, Evaluator, format_value
from .expr import ParseError


def _load_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line (need key=value): {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowcalc",
        description="Exact verification suite and expression calculator for "
        "intersection-theoretic computations on moduli of curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the verification suite")
    verify.add_argument("--only", help="comma-separated check ids", default=None)
    verify.add_argument("--format", choices=("text", "json"), default=None)
    verify.add_argument("--trunc", type=int, default=None, help="truncation order (default 4)")
    verify.add_argument("--config", help="key=value config file", default=None)
    verify.add_argument("--list", action="store_true", help="list check ids and exit")

    ev = sub.add_parser("eval", help="evaluate one expression")
    ev.add_argument("expression")
    ev.add_argument("--defs", help="definitions file (name = expr, one per line)")
    ev.add_argument("--trunc", type=int, default=None)

    repl = sub.add_parser("repl", help="batch read-eval-print on stdin")
    repl.add_argument("--defs", help="definitions file (name = expr, one per line)")
    repl.add_argument("--trunc", type=int, default=None)

    return parser


def _cmd_verify(args) -> int:
    trunc = args.trunc
    only = args.only
    fmt = args.format
    if args.config:
        try:
            cfg = _load_config(args.config)
        except (OSError, ValueError) as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 2
        if trunc is None and "trunc" in cfg:
            trunc = int(cfg["trunc"])
        if only is None and "only" in cfg:
            only = cfg["only"]
        if fmt is None and "format" in cfg:
            fmt = cfg["format"]
    fmt = fmt or "text"
    if args.list:
        print("\n".join(checks.check_ids()))
        return 0
    selection = tuple(s.strip() for s in only.split(",") if s.strip()) if only else None
    config = checks.SuiteConfig(trunc=trunc if trunc is not None else 4)
    try:
        results = checks.run_suite(selection, config)
    except checks.UnknownCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(checks.format_text(results) if fmt == "text" else checks.format_json(results))
    return checks.exit_code(results)


def _make_evaluator(args) -> Evaluator:
    ev = Evaluator(trunc=args.trunc if args.trunc is not None else 4)
    if getattr(args, "defs", None):
        ev.load_definitions(Path(args.defs).read_text())
    return ev


def _cmd_eval(args) -> int:
    try:
        ev = _make_evaluator(args)
        value = ev.run(args.expression)
    except (ParseError, EvalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(format_value(value))
    return 0


def _cmd_repl(args) -> int:
    try:
        ev = _make_evaluator(args)
    except (ParseError, EvalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    status = 0
    for raw in sys.stdin:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            print(format_value(ev.run(line)))
        except (ParseError, EvalError) as exc:
            print(f"error: {exc}")
            status = 2
    return status


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "repl":
        return _cmd_repl(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
