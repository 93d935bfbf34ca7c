"""Command line entry point: ``relkit eval``, ``relkit check`` and ``relkit render``."""

from __future__ import annotations

import argparse
import os
import sys

from ..errors import RelkitError
from ..finset import Universe
from ..laws import SUITES, reports_json, run_laws, summarize
from ..laws.engine import DEFAULT_INSTANCES, DEFAULT_SEED
from ..relcore import Relation
from .fileformat import Document, load_file, quote
from .render import render
from .term import eval_text

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _seed_default() -> int:
    env = os.environ.get("RELKIT_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"relkit: RELKIT_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relkit", description="Finite relation algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a relational term")
    ev.add_argument("-f", "--file", help="relation file providing universes and relations")
    ev.add_argument("-e", "--expr", required=True, help="term to evaluate")
    _style_args(ev)

    ck = sub.add_parser("check", help="run a law suite")
    ck.add_argument("suite", choices=SUITES + ("all",))
    ck.add_argument("--seed", type=int, default=None, help="random seed (default: $RELKIT_SEED or 1)")
    ck.add_argument("--max-size", type=int, default=None, help="upper bound on random universe sizes")
    ck.add_argument("--instances", type=int, default=DEFAULT_INSTANCES, help="random instances per law")
    ck.add_argument("--json", metavar="PATH", help="write the law reports as JSON ('-' for stdout)")
    ck.add_argument("-q", "--quiet", action="store_true", help="only print failures and the summary")

    rd = sub.add_parser("render", help="print a relation from a file")
    rd.add_argument("-f", "--file", required=True)
    rd.add_argument("name")
    _style_args(rd)
    return p


def _style_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--style", choices=("matrix", "sets"), default="matrix")
    p.add_argument("--dense", action="store_true", help="print 0 instead of . for absent pairs")


def _show(value, args) -> str:
    if isinstance(value, Relation):
        return render(value, args.style, args.dense)
    if isinstance(value, Universe):
        return f"{value.name} = {{{', '.join(quote(x) for x in value.labels)}}}\n"
    raise RelkitError(f"the term evaluates to a label, not a relation: {value!r}")


def cmd_eval(args) -> int:
    doc = load_file(args.file) if args.file else Document()
    sys.stdout.write(_show(eval_text(args.expr, doc.env()), args))
    return EXIT_OK


def cmd_render(args) -> int:
    env = load_file(args.file).env()
    if args.name not in env:
        raise RelkitError(f"{args.name!r} is not defined in {args.file}")
    sys.stdout.write(_show(env[args.name], args))
    return EXIT_OK


def cmd_check(args) -> int:
    seed = _seed_default() if args.seed is None else args.seed
    reports = run_laws(args.suite, seed=seed, max_size=args.max_size, instances=args.instances)
    # keep stdout pure JSON when the reports go there
    out = sys.stderr if args.json == "-" else sys.stdout
    for r in reports:
        if args.quiet and r.passed:
            continue
        mark = "PASS" if r.passed else "FAIL"
        exh = "complete" if r.exhaustive_complete else "partial"
        out.write(
            f"{mark} [{r.suite}] {r.name}: {r.instances} random ({r.distinct} distinct), "
            f"{r.exhaustive_instances} exhaustive ({exh})\n"
        )
        if not r.passed:
            if r.error:
                out.write(f"    error: {r.error}\n")
            if r.counterexample:
                for k, v in r.counterexample.items():
                    out.write(f"    {k} = {v}\n")
    s = summarize(reports)
    out.write(f"{s.total - len(s.failed)}/{s.total} laws passed (seed {seed})\n")
    if args.json:
        text = reports_json(reports) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    return EXIT_FAILED if s.failed else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"eval": cmd_eval, "check": cmd_check, "render": cmd_render}[args.command]
    try:
        return handler(args)
    except (RelkitError, OSError) as exc:
        print(f"relkit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
