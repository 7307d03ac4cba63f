"""``thornlab`` command line: construct, index, formula, audit.

Values go to stdout, diagnostics to stderr. Exit codes: 0 success (for
``audit``, no mismatches), 1 audit found mismatches, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import audit_engine, formula_registry as reg
from .graph_core import GraphError, parse_base, read_edge_list, write_dot, write_edge_list
from .indices import IndexKind, compute, hm
from .thorn_builder import ThornSpec, ThornSpecError, ThornType, build, parse_t

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse's own usage errors already exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _spec_from_args(base, type_: str, r: int, s: int | None, t: str) -> ThornSpec:
    ty = ThornType(type_)
    return ThornSpec(ty, r=r, t=parse_t(t, base.graph.n), s=s if ty.uses_s else None)


def cmd_construct(args) -> int:
    base = parse_base(args.base)
    out = build(base.graph, _spec_from_args(base, args.type, args.r, args.s, args.t)).graph
    text = write_dot(out) if args.format == "dot" else write_edge_list(out)
    _emit(text + "\n", args.output)
    return EXIT_OK


def cmd_index(args) -> int:
    try:
        with open(args.graph) as fh:
            g = read_edge_list(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {args.graph}: {exc.strerror}") from None
    for name in args.index or ["hm"]:
        value = compute(g, IndexKind(name.upper()))
        print(f"{name.upper()} = {value}" if args.human else value)
    return EXIT_OK


def cmd_formula(args) -> int:
    meta = reg.get(args.id)
    base = parse_base(args.base)
    s = args.s if meta.thorn_type.uses_s else None
    t = parse_t(args.t, base.graph.n)
    closed = reg.evaluate(meta.id, base.graph, t, args.r, s, base.family)
    values = [("closed", closed)]
    if args.with_oracle:
        oracle = hm(build(base.graph, ThornSpec(meta.thorn_type, args.r, t, s)).graph)
        values += [("oracle", oracle), ("delta", closed - oracle)]
    for label, v in values:
        print(f"{label} {v}" if args.human else v)
    return EXIT_OK


def cmd_audit(args) -> int:
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise audit_engine.ConfigError(f"cannot load config {args.config}: {exc}") from None
        cfg = audit_engine.GridConfig.from_dict(data)
    else:
        cfg = audit_engine.GridConfig()
    if args.formula:
        cfg = audit_engine.GridConfig.from_dict({**cfg.to_dict(), "formulas": args.formula})
    workers = args.workers or _env_workers()
    report = audit_engine.run(cfg, workers=workers)
    _emit(audit_engine.render(report, args.format), args.report)
    bad = [s.formula for s in report.summary if s.mismatched]
    print(f"{len(report.records)} records, {report.mismatches} mismatching; "
          f"formulas with counterexamples: {', '.join(bad) or 'none'}", file=sys.stderr)
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def _env_workers() -> int:
    raw = os.environ.get("THORNLAB_WORKERS", "1")
    if not raw.isdigit() or int(raw) < 1:
        raise audit_engine.ConfigError(f"THORNLAB_WORKERS must be a positive integer, got {raw!r}")
    return int(raw)


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thornlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=audit_engine.version_string())
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def thorn_flags(sp, *, t_required=True):
        sp.add_argument("--base", required=True,
                        help="path:n, cycle:n, complete:n, bipartite:r:s, star:n, random:n:seed, file:<path>")
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--s", type=int)
        sp.add_argument("--t", required=t_required, help="uniform:<k>, random:<max>:<seed> or a,b,c")

    c = sub.add_parser("construct", help="build a thorn graph and print it")
    thorn_flags(c)
    c.add_argument("--type", required=True, choices=[t.value for t in ThornType])
    c.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    i = sub.add_parser("index", help="compute indices of an edge-list file")
    i.add_argument("graph")
    i.add_argument("--index", action="append", choices=[k.value.lower() for k in IndexKind],
                   help="repeatable; default hm")
    i.add_argument("--human", action="store_true")
    i.set_defaults(func=cmd_index)

    f = sub.add_parser("formula", help="evaluate one closed form")
    f.add_argument("--id", required=True, choices=list(reg.REGISTRY))
    thorn_flags(f)
    f.add_argument("--with-oracle", action="store_true")
    f.add_argument("--human", action="store_true")
    f.set_defaults(func=cmd_formula)

    a = sub.add_parser("audit", help="sweep a grid and compare closed forms with the oracle")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--config")
    src.add_argument("--default-grid", action="store_true")
    a.add_argument("--formula", action="append", choices=list(reg.REGISTRY),
                   help="restrict to these ids (repeatable)")
    a.add_argument("--report", help="output path (default stdout)")
    a.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
    a.add_argument("--workers", type=int, help="default: $THORNLAB_WORKERS or 1")
    a.set_defaults(func=cmd_audit)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ThornSpecError, reg.FormulaError, audit_engine.ConfigError, ValueError) as exc:
        print(f"thornlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
