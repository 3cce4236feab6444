"""Command line: ``orbinv analyze|verify|catalog``.

Exit codes: 0 all selected checks pass, 1 a check failed, 2 invalid input or a
requested check whose hypotheses the model does not satisfy.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import __version__, catalog
from .modelfile import InputError, load_model_dict, load_model_file
from .report import analyze, parse_checks, to_json, to_text, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def load(target: str):
    """A path to a model file, or the name of a catalog entry."""
    if not os.path.exists(target) and target in catalog.CATALOG:
        return load_model_dict(catalog.entry(target).data, source=f"catalog:{target}")
    return load_model_file(target)


def _emit(text: str, output):
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".orbinv-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        os.unlink(tmp)
        raise


def cmd_analyze(path: str, fmt: str = "json", output=None) -> int:
    report = analyze(load(path))
    _emit(to_json(report) if fmt == "json" else to_text(report), output)
    return EXIT_OK


def cmd_verify(path: str, checks: str, fmt: str = "json", output=None) -> int:
    try:
        selected, explicit = parse_checks(checks)
    except ValueError as exc:
        raise InputError(str(exc), "--checks") from None
    report, code = verify(load(path), selected, explicit)
    _emit(to_json(report) if fmt == "json" else to_text(report), output)
    return code


def cmd_catalog(fmt: str = "text", output=None) -> int:
    rows = []
    for e in catalog.CATALOG.values():
        flag = {True: "gorenstein", False: "non-gorenstein", None: "gset"}[e.gorenstein]
        rows.append((e.name, e.data["kind"], flag, e.description))
    if fmt == "json":
        import json
        text = json.dumps([{"name": n, "kind": k, "flag": f, "description": d} for n, k, f, d in rows],
                          indent=2, sort_keys=True) + "\n"
    else:
        w = max(len(r[0]) for r in rows)
        text = "".join(f"{n:<{w}}  {k:<10} {f:<15} {d}\n" for n, k, f, d in rows)
    _emit(text, output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbinv", description="Exact invariants of finite quotient orbifolds.")
    p.add_argument("--version", action="version", version=f"orbinv {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="sector tables, checks and invariants of a model")
    a.add_argument("model", help="model file or catalog name")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--output", "-o", help="write the report here instead of stdout")

    v = sub.add_parser("verify", help="run theorem checks")
    v.add_argument("model", help="model file or catalog name")
    v.add_argument("--checks", default="all", help="comma list of confun, euler, trace, evidence, all")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--output", "-o")

    c = sub.add_parser("catalog", help="list built-in models")
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.add_argument("--export", metavar="DIR", help="write every catalog model file into DIR")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args.model, args.format, args.output)
        if args.command == "verify":
            return cmd_verify(args.model, args.checks, args.format, args.output)
        if args.export:
            for path in catalog.export(args.export):
                print(path)
            return EXIT_OK
        return cmd_catalog(args.format)
    except InputError as exc:
        print(f"orbinv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
