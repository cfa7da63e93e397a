"""``degenlab`` command line."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from ..catalog import CatalogFileError, builtin_catalog, catalog_hash, load_catalog, save_catalog
from ..geometry import DotOptions, emit_dot, figure_graph
from .report import Record, Report
from .suites import (
    Context,
    all_records,
    automorphism_records,
    component_records,
    degeneration_records,
    dimension_records,
    identity_records,
    isomorphism_records,
    nondegeneration_records,
    thread_cap,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECKS = {
    "identities": lambda ctx, a: identity_records(ctx, a.variety),
    "automorphisms": lambda ctx, a: automorphism_records(ctx),
    "degenerations": lambda ctx, a: degeneration_records(ctx, a.variety),
    "nondegenerations": lambda ctx, a: nondegeneration_records(ctx, a.variety),
    "dimensions": lambda ctx, a: dimension_records(ctx, a.variety),
    "isomorphisms": lambda ctx, a: isomorphism_records(ctx),
}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="sampling seed (default 0)")
    common.add_argument("--catalog", type=Path, default=argparse.SUPPRESS, help="catalog file replacing the built-in one")

    p = argparse.ArgumentParser(prog="degenlab", description="Verify degenerations of 2-dimensional Poisson-type algebras.")
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument("--catalog", type=Path, default=None, help="catalog file replacing the built-in one")
    sub = p.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="inspect or export the catalog", parents=[common])
    csub = cat.add_subparsers(dest="action", required=True)
    ls = csub.add_parser("list", help="list entries", parents=[common])
    ls.add_argument("--variety")
    ex = csub.add_parser("export", help="write the catalog file", parents=[common])
    ex.add_argument("path", type=Path)

    chk = sub.add_parser("check", help="run one verification suite", parents=[common])
    chk.add_argument("suite", choices=sorted(CHECKS))
    chk.add_argument("--variety")
    chk.add_argument("--samples", type=_positive, default=3, help="samples per free parameter (default 3)")
    chk.add_argument("--report", type=Path, help="also write a report file")

    comp = sub.add_parser("components", help="irreducible components against the claims", parents=[common])
    comp.add_argument("--variety")
    comp.add_argument("--report", type=Path)

    gr = sub.add_parser("graph", help="write a degeneration graph as DOT", parents=[common])
    gr.add_argument("--variety", required=True)
    gr.add_argument("--dot", type=Path, required=True, help="output path, - for standard output")
    gr.add_argument("--figure", action="store_true", help="draw the catalog figure nodes and edges")
    gr.add_argument("--show-implied", action="store_true", help="include edges implied by transitivity")

    ver = sub.add_parser("verify", help="run every suite", parents=[common])
    ver.add_argument("scope", choices=["all"])
    ver.add_argument("--samples", type=_positive, default=3)
    ver.add_argument("--report", type=Path, required=True)
    return p


def _print_records(records: Sequence[Record], out: TextIO) -> None:
    for r in sorted(records, key=lambda x: (x.id, x.kind)):
        out.write(f"{r.status.upper():<16} {r.id}\n")
        for d in r.diagnostics:
            out.write(f"    {d}\n")


def _finish(rep: Report, out: TextIO, path: Optional[Path]) -> int:
    _print_records(rep.records, out)
    s = rep.summary
    out.write("summary: " + ", ".join(f"{k} {v}" for k, v in s.counts.items()) + f" (total {s.total})\n")
    if path is not None:
        path.write_text(rep.text(), encoding="utf-8", newline="\n")
    return EXIT_FAIL if s.failures else EXIT_OK


def _command_text(args: argparse.Namespace) -> str:
    if args.command == "check":
        return f"check {args.suite}" + (f" --variety {args.variety}" if args.variety else "") + f" --samples {args.samples}"
    if args.command == "verify":
        return f"verify all --samples {args.samples}"
    return args.command + (f" --variety {args.variety}" if getattr(args, "variety", None) else "")


def _dispatch(args: argparse.Namespace, out: TextIO) -> int:
    catalog = builtin_catalog() if args.catalog is None else load_catalog(args.catalog)
    variety = getattr(args, "variety", None)
    if variety is not None and variety not in catalog.variety_names():
        raise UsageError(f"unknown variety {variety!r}; known: {', '.join(catalog.variety_names())}")
    ctx = Context(catalog, seed=args.seed, samples=getattr(args, "samples", 3), threads=thread_cap())

    if args.command == "catalog":
        if args.action == "export":
            save_catalog(catalog, args.path)
            return EXIT_OK
        for e in catalog.entries:
            if variety is None or e.variety == variety:
                params = ",".join(e.params) or "-"
                out.write(f"{e.variety}\t{e.id}\t{params}\t{e.pair.describe()}\n")
        return EXIT_OK

    if args.command == "graph":
        base = ctx.graph(variety)
        g = base
        if args.figure:
            fig = catalog.figure(variety)
            if fig is None:
                raise UsageError(f"variety {variety!r} has no figure")
            g = figure_graph(catalog, fig, base)
        text = emit_dot(g, DotOptions(name=variety, show_implied=args.show_implied))
        if str(args.dot) == "-":
            out.write(text)
        else:
            args.dot.write_text(text, encoding="utf-8", newline="\n")
        return EXIT_OK

    if args.command == "check":
        records = CHECKS[args.suite](ctx, args)
        path = args.report
    elif args.command == "components":
        records = component_records(ctx, variety)
        path = args.report
    else:
        records = all_records(ctx)
        path = args.report
    rep = Report.build(_command_text(args), args.seed, catalog_hash(catalog), records)
    return _finish(rep, out, path)


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run the command line and return the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _dispatch(args, out)
    except (UsageError, CatalogFileError, OSError, ValueError) as exc:
        err.write(f"degenlab: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
