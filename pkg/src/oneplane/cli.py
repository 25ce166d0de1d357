"""Command-line front end: ``oneplane {gen,check,solve,verify,export,corpus}``.

Exit codes: 0 on success, 1 when an operation fails (invalid input file,
failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import connalg, solver
from .constructions import (
    gadget_only,
    gen_sevenreg,
    gen_theorem2,
    gen_theorem2_general,
    gen_theorem3,
    gen_theorem4,
)
from .core import OnePlaneError, RotationMultigraph, validate_drawing
from .export import to_dot, to_svg
from .fileio import ParseError, load, save
from .library import base_graph
from .verify import TARGETS, corpus_check, verify

FAMILIES = ("thm2", "thm2gen", "thm3", "thm4", "seven", "gadget")
DEFAULT_BASE = {"thm2gen": "cube", "thm3": "prism3"}


def _resolve_base(spec: str) -> RotationMultigraph:
    path = Path(spec)
    if path.suffix == ".1pg" or path.exists():
        return load(path).graph
    return base_graph(spec)


def _cmd_gen(args) -> int:
    fam = args.family
    if fam in ("thm2", "thm4", "seven", "gadget"):
        if args.base is not None:
            raise _Usage(f"gen {fam} takes --k, not --base")
        k = args.k if args.k is not None else (4 if fam == "gadget" else 2)
        drawing = {"thm2": gen_theorem2, "thm4": gen_theorem4, "seven": gen_sevenreg, "gadget": gadget_only}[fam](k)
        note = f"{fam} k={k}"
    else:
        if args.k is not None:
            raise _Usage(f"gen {fam} takes --base, not --k")
        base = _resolve_base(args.base or DEFAULT_BASE[fam])
        drawing = gen_theorem2_general(base) if fam == "thm2gen" else gen_theorem3(base, seed=args.seed)
        note = f"{fam} base={args.base or DEFAULT_BASE[fam]}"
    save(drawing, args.output, note)
    g = drawing.graph
    print(f"wrote {args.output}: {g.n} vertices, {g.m} edges, {len(drawing.crossings)} crossings")
    return 0


def _cmd_check(args) -> int:
    drawing = load(args.input)
    g = drawing.graph
    verdict = validate_drawing(drawing)
    print(f"valid: {'yes' if verdict.ok else 'no'}")
    for v in verdict.violations:
        print(f"  violation: {v}")
    print(f"vertices: {g.n}")
    print(f"edges: {g.m}")
    print(f"crossings: {len(drawing.crossings)}")
    print(f"crossing edges: {len(drawing.crossing_edges)}")
    degs = sorted(set(g.degrees()))
    print(f"degrees: {degs[0]}-regular" if len(degs) == 1 else f"degrees: {degs[0]}..{degs[-1]}")
    print(f"simple: {'yes' if g.is_simple() else 'no'}")
    if connalg.is_connected(g):
        print(f"kappa: {connalg.vertex_connectivity(g)}")
        print(f"kappa_edge: {connalg.edge_connectivity(g)}")
    else:
        print(f"components: {len(connalg.components(g))}")
        print("kappa: 0")
        print("kappa_edge: 0")
    return 0 if verdict.ok else 1


def _budget(args) -> solver.Budget | None:
    if args.budget is None and args.nodes is None:
        return None
    return solver.Budget(nodes=args.nodes or solver.DEFAULT_NODES, seconds=args.budget)


def _cmd_solve(args) -> int:
    drawing = load(args.input)
    budget = _budget(args) or solver.Budget()
    workers = 1 if args.deterministic else args.workers
    if args.objective == "components":
        if args.mode == "heuristic":
            report = solver.exchange_heuristic(drawing, seed=args.seed, budget=budget)
        else:
            report = solver.exact_search(drawing, "min_components", budget=budget, seed=args.seed)
        print(f"{report.status} components = {report.value}")
    else:
        if args.l is None:
            raise _Usage("--objective l-connected needs --l")
        if args.mode == "heuristic":
            raise _Usage("heuristic mode only supports --objective components")
        report = solver.exact_search(drawing, "exists_l_connected", l=args.l, budget=budget, workers=workers, seed=args.seed)
        print(f"{args.l}-connected spanning plane subgraph: {report.status}")
    print(f"nodes explored: {report.nodes_explored}, wall time {report.wall_time:.2f}s")
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return 0


def _cmd_verify(args) -> int:
    params = {"k": args.k, "base": args.base, "instance": args.instance, "seed": args.seed, "trials": args.trials}
    budget = _budget(args)
    out_dir = None
    if args.output:
        out_dir = Path(args.output).with_suffix("")
        out_dir = out_dir.parent / f"{out_dir.name}_artifacts"
    try:
        report = verify(args.target, out_dir=out_dir, budget=budget, **params)
    except ValueError as exc:
        if isinstance(exc, OnePlaneError):
            raise
        raise _Usage(str(exc)) from exc
    print(report.summary())
    if args.output:
        Path(args.output).write_text(report.to_json(), encoding="utf-8")
    return 0 if report.overall else 1


def _cmd_export(args) -> int:
    drawing = load(args.input)
    text = to_dot(drawing) if args.format == "dot" else to_svg(drawing)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_corpus(args) -> int:
    report = corpus_check()
    print(report.summary())
    return 0 if report.overall else 1


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oneplane", description="Spanning plane subgraphs of 1-plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a construction as a .1pg file")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--k", type=int)
    g.add_argument("--base", help="built-in base name or path to a .1pg file")
    g.add_argument("--seed", type=int, help="Tait colouring seed (thm3)")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("check", help="validate a drawing and report connectivity")
    c.add_argument("input")
    c.set_defaults(func=_cmd_check)

    s = sub.add_parser("solve", help="search spanning plane subgraphs")
    s.add_argument("input")
    s.add_argument("--objective", choices=("components", "l-connected"), required=True)
    s.add_argument("--l", type=int)
    s.add_argument("--mode", choices=("exact", "heuristic"), default="exact")
    s.add_argument("--budget", type=float, help="wall-clock seconds (default $ONEPLANE_BUDGET_SECS or 60)")
    s.add_argument("--nodes", type=int, help="search node budget (default 10^7)")
    s.add_argument("--deterministic", action="store_true", help="single-task search")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", help="write the SolveReport as JSON")
    s.set_defaults(func=_cmd_solve)

    v = sub.add_parser("verify", help="run a scripted verification target")
    v.add_argument("target", choices=TARGETS)
    v.add_argument("--k", type=int)
    v.add_argument("--base")
    v.add_argument("--instance", help="family:param, e.g. thm4:2 or thm3:nonham38")
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--budget", type=float, help="wall-clock seconds per search")
    v.add_argument("--nodes", type=int, help="node budget per search")
    v.add_argument("-o", "--output", help="report JSON path; artifacts go next to it")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("export", help="write DOT or SVG")
    e.add_argument("input")
    e.add_argument("--format", choices=("dot", "svg"), required=True)
    e.add_argument("-o", "--output")
    e.set_defaults(func=_cmd_export)

    k = sub.add_parser("corpus", help="revalidate built-in graphs and gadgets")
    k.set_defaults(func=_cmd_corpus)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except (ParseError, OnePlaneError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
