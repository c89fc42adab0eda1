"""Command-line front end: weylstrata <command> --type T [--rank n] [--format ...] [--out path]."""

from __future__ import annotations

import argparse
import json
import sys

from . import classical_bc as bc
from . import classical_d as cd
from . import strata_graph as sg
from .exceptional_tables import TYPES, class_table, render_class_table, render_ws_table, tables_json
from .weyl_engine.registry import build, parse_type

COMMANDS = ("list-classes", "list-strata", "distinguished", "ws-map", "edges", "graph", "verify", "tables")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylstrata", description="Strata of conjugacy classes of Weyl groups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--type", dest="type", help="G2, F4, E6, E7, E8, or A/B/C/D with --rank (B4 also works)")
    p.add_argument("--rank", type=int)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--stratum", type=int, help="graph: export a single stratum by position")
    p.add_argument("--max-rank", type=int, default=6, help="verify: largest classical rank for engine checks")
    return p


def _group(args) -> tuple[str, int]:
    if not args.type:
        raise UsageError("--type is required")
    try:
        kind, n = parse_type(args.type, args.rank)
    except ValueError as e:
        raise UsageError(str(e)) from None
    lo = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}[kind]
    hi = {"E": 8, "F": 4, "G": 2}.get(kind, 99)
    if not lo <= n <= hi:
        raise UsageError(f"unsupported group {kind}{n}")
    return kind, n


def _exceptional_name(args) -> str:
    kind, n = _group(args)
    name = f"{kind}{n}"
    if name not in TYPES:
        raise UsageError(f"{name} has no exceptional table")
    return name


def _json(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def _need(args, *formats):
    if args.format not in formats:
        raise UsageError(f"{args.command} supports --format {'|'.join(formats)}")


def cmd_list_classes(args) -> tuple[str, int]:
    _need(args, "text", "json")
    ctx = build(*_group(args))
    if args.format == "json":
        return _json(ctx.to_json()), 0
    lines = [f"{c.index:3d}  m={c.m}  {c.name}  [{c.K_type}]  word={''.join(map(str, c.word)) or '-'}" for c in ctx.classes]
    return "\n".join(lines) + "\n", 0


def cmd_list_strata(args) -> tuple[str, int]:
    graph = sg.compute_strata(*_group(args))
    if args.format == "json":
        return _json(sg.to_json(graph)), 0
    if args.format == "dot":
        return sg.to_dot(graph), 0
    return sg.render_text(graph), 0


def cmd_distinguished(args) -> tuple[str, int]:
    _need(args, "text", "json")
    kind, n = _group(args)
    ctx = build(kind, n)
    if ctx.exceptional:
        names = [str(e.carter) for e in class_table(ctx.name) if e.distinguished]
    else:
        names = [ctx.classes[i].name for i in sorted(ctx.cl_dist_classes())]
    if args.format == "json":
        return _json(names), 0
    return "".join(f"[{x}]\n" for x in names), 0


def cmd_ws_map(args) -> tuple[str, int]:
    _need(args, "text", "json")
    kind, n = _group(args)
    if kind in "EFG":
        t = f"{kind}{n}"
        if args.format == "json":
            return _json(tables_json(t)["ws"]), 0
        return render_ws_table(t), 0
    if kind in "BC":
        rows = [(str(C), str(bc.ws_type(C))) for C in bc.enumerate_CL_dist(n)]
    elif kind == "D":
        rows = [(str(C), "×".join(cd.ws_type_d(C).coxeter_factors()) or "A0") for C in cd.enumerate_CL_dist_d(n)]
    else:
        raise UsageError("ws-map is defined for types B, C, D and the exceptional types")
    if args.format == "json":
        return _json([{"class": a, "ws": b} for a, b in rows]), 0
    return "".join(f"{a} ↦ {b}\n" for a, b in rows), 0


def cmd_edges(args) -> tuple[str, int]:
    _need(args, "text", "json")
    graph = sg.compute_strata(*_group(args))
    data = sg.to_json(graph)["edges"]
    if args.format == "json":
        return _json(data), 0
    lines = []
    for e in data:
        via = sorted({o["type"] for o in e["origins"]})
        lines.append(f"{e['source']} -> {e['target']}  via {', '.join(via)}")
    return "\n".join(lines) + ("\n" if lines else ""), 0


def cmd_graph(args) -> tuple[str, int]:
    graph = sg.compute_strata(*_group(args))
    if args.stratum is not None and not 0 <= args.stratum < len(graph.strata):
        raise UsageError(f"stratum index out of range 0..{len(graph.strata) - 1}")
    if args.format == "json":
        data = sg.to_json(graph)
        if args.stratum is not None:
            data["strata"] = [data["strata"][args.stratum]]
        return _json(data), 0
    if args.format == "text":
        lines = sg.render_text(graph).splitlines(keepends=True)
        return ("".join(lines) if args.stratum is None else lines[args.stratum]), 0
    return sg.to_dot(graph, args.stratum), 0


def cmd_verify(args) -> tuple[str, int]:
    _need(args, "text", "json")
    from .verification import reports_json, run_all

    types = None
    if args.type:
        kind, n = _group(args)
        types = {f"{kind}{n}"} if kind in "EFG" else {kind}
    reports = run_all(max_classical_rank=args.max_rank, types=types)
    code = 0 if all(r.ok for r in reports) else 1
    if args.format == "json":
        return reports_json(reports), code
    lines = [r.line() for r in reports]
    failed = sum(not r.ok for r in reports)
    lines.append(f"{len(reports) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n", code


def cmd_tables(args) -> tuple[str, int]:
    _need(args, "text", "json")
    t = _exceptional_name(args)
    if args.format == "json":
        return _json(tables_json(t)), 0
    return render_class_table(t), 0


HANDLERS = {
    "list-classes": cmd_list_classes,
    "list-strata": cmd_list_strata,
    "distinguished": cmd_distinguished,
    "ws-map": cmd_ws_map,
    "edges": cmd_edges,
    "graph": cmd_graph,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        text, code = HANDLERS[args.command](args)
    except UsageError as e:
        print(f"weylstrata: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
