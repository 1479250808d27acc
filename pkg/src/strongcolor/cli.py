"""Command-line interface.

Exit codes: 0 on success, 1 when a verification fails (or a question is left
undetermined), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .coloring import ColoringError, StrongColoring, color_greedy, verify_strong
from .constructions import (
    CkdSpec,
    evaluate_bounds,
    gen_ckd,
    gen_hex_patch,
    gen_layered_drum,
    gen_prism,
    subdivide,
    subdivide_all,
)
from .corpus import DEFAULT_SEED, general_instances, subcubic_instances
from .discharging import GENERAL, SUBCUBIC, DischargeError, audit
from .exact import BudgetExhausted, SolverConfig, strong_chromatic_index
from .graph import GraphError, PlaneEmbedding
from .io import FormatError, parse_coloring_file, parse_graph_file, write_coloring_file, write_graph_file
from .reduction import (
    PreconditionError,
    ReductionError,
    ReductionTrace,
    color_auto,
    color_girth6,
    color_subcubic_girth6,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _num(x: int | Fraction) -> int | str:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _table(rows: list[Sequence[Any]], header: Sequence[str]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def write_reports(results: dict[str, Any], as_json: bool, out=None) -> None:
    """Emit ``results`` as JSON (field order kept) or as ``key: value`` text."""
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(results, indent=2) + "\n")
        return
    width = max((len(k) for k in results), default=0)
    for k, v in results.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            out.write(f"{k}:\n")
            out.write(_table([list(r.values()) for r in v], list(v[0].keys())) + "\n")
        else:
            out.write(f"{k.ljust(width)} : {v}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, need_embedding: bool = False):
    g, emb = parse_graph_file(_read(path))
    if need_embedding and emb is None:
        raise UsageError(f"{path} has no rotation lines; this command needs an embedding")
    return g, emb


def _emit_text(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _witness_rows(c: StrongColoring) -> list[list[int]]:
    return [[u, w, color + 1] for (u, w), color in sorted(c.assignment.items())]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "ckd":
        g, emb = gen_ckd(CkdSpec(args.k, args.d))
    elif args.family == "prism":
        g, emb = gen_prism()
    elif args.family == "hex":
        g, emb = gen_hex_patch(args.rings)
    elif args.family == "drum":
        g, emb = gen_layered_drum(args.n)
    else:
        g, emb = _load_graph(args.file, need_embedding=True)
        if args.edge:
            g, emb = subdivide(g, emb, tuple(args.edge), args.times)
        else:
            g, emb = subdivide_all(g, emb, args.times)
    _emit_text(write_graph_file(g, emb), args.output)
    return EXIT_OK


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        max_colors=args.max_colors,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        workers=args.workers,
    )


def cmd_solve(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.file)
    if g.m == 0:
        raise UsageError("graph has no edges")
    try:
        res = strong_chromatic_index(g, _solver_config(args))
    except BudgetExhausted as exc:
        write_reports({"status": "undetermined", "reason": str(exc), "nodes": exc.nodes}, args.json)
        return EXIT_FAIL
    if not verify_strong(g, res.witness).valid:
        write_reports({"status": "invalid-witness"}, args.json)
        return EXIT_FAIL
    if args.certificate:
        Path(args.certificate).write_text(write_coloring_file(res.witness))
    report = {
        "chi_s": res.index,
        "certified_infeasible": res.certified_infeasible,
        "nodes": res.stats.nodes,
        "seconds": round(res.stats.seconds, 4),
    }
    if args.json:
        report["witness"] = _witness_rows(res.witness)
    write_reports(report, args.json)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    need = args.mode in ("auto", "girth6", "subcubic")
    g, emb = _load_graph(args.file, need_embedding=need)
    report: dict[str, Any] = {"mode": args.mode, "max_degree": g.max_degree, "edges": g.m}
    trace = ReductionTrace()
    if args.mode == "auto":
        res = color_auto(g, emb)
        c, trace = res.coloring, res.trace
        report.update(algorithm=res.algorithm, budget=res.budget)
    elif args.mode == "girth6":
        c = color_girth6(g, emb, trace)
        report["budget"] = 3 * g.max_degree + 6
    elif args.mode == "subcubic":
        c = color_subcubic_girth6(g, emb, trace)
        report["budget"] = 9
    elif args.mode == "greedy":
        palette = args.palette or max(g.m, 1)
        out = color_greedy(g, None, palette)
        if not out:
            write_reports({**report, "status": "palette-exhausted", "blocking_edge": list(out.blocking_edge)}, args.json)
            return EXIT_FAIL
        c = out
        report["budget"] = palette
    else:
        res = strong_chromatic_index(g, _solver_config(args))
        c = res.witness
        report["budget"] = res.index
    verdict = verify_strong(g, c)
    if not verdict.valid:
        write_reports({**report, "status": "invalid", "conflicts": len(verdict.conflicts)}, args.json)
        return EXIT_FAIL
    report["colors_used"] = c.num_colors()
    report["status"] = "valid"
    if trace.kinds:
        report["configurations"] = dict(sorted(trace.kinds.items()))
    if args.certificate:
        Path(args.certificate).write_text(write_coloring_file(c))
    if args.json:
        report["coloring"] = _witness_rows(c)
    write_reports(report, args.json)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.graph)
    c = parse_coloring_file(_read(args.coloring))
    try:
        verdict = verify_strong(g, c)
    except ColoringError as exc:
        write_reports({"status": "invalid", "reason": str(exc)}, args.json)
        return EXIT_FAIL
    if verdict.valid:
        write_reports({"status": "valid", "colors_used": c.num_colors(), "palette": c.palette_size}, args.json)
        return EXIT_OK
    rows = [
        {"edge_a": f"{x.first[0]}-{x.first[1]}", "edge_b": f"{x.second[0]}-{x.second[1]}",
         "distance": x.distance, "color": c[x.first] + 1}
        for x in verdict.conflicts
    ]
    write_reports({"status": "invalid", "conflicts": rows}, args.json)
    return EXIT_FAIL


def cmd_discharge(args: argparse.Namespace) -> int:
    g, emb = _load_graph(args.file, need_embedding=True)
    rep = audit(g, emb, args.mode)
    led = rep.ledger
    objects = [
        {"object": f"v{v}", "size": g.degree(v), "initial": 2 * g.degree(v) - 6, "final": _num(ch)}
        for v, ch in led.vertex_charge.items()
    ] + [
        {"object": f"f{i}", "size": led.faces[i].length, "initial": led.faces[i].length - 6, "final": _num(ch)}
        for i, ch in led.face_charge.items()
    ]
    transfers = [
        {"rule": t.rule, "from": f"{t.source[0]}{t.source[1]}", "to": f"{t.target[0]}{t.target[1]}",
         "amount": _num(t.amount)}
        for t in led.transfers
    ]
    report: dict[str, Any] = {
        "mode": args.mode,
        "initial_total": _num(rep.initial_total),
        "final_total": _num(rep.final_total),
        "negative_objects": len(rep.negatives),
        "configuration": rep.configuration.kind.value if rep.configuration else None,
        "contradiction": rep.contradiction,
        "charges": objects,
    }
    if args.transfers:
        report["transfers"] = transfers
    write_reports(report, args.json)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.kind == "ckd":
        report = {
            "k": args.k,
            "d": args.d,
            "lower": _num(evaluate_bounds("ckd_lower", k=args.k, d=args.d)),
            "upper": _num(evaluate_bounds("ckd_upper", k=args.k, d=args.d)),
        }
    elif args.kind == "conjecture19":
        value = evaluate_bounds("conjecture19", k=args.k, delta=args.delta, C=Fraction(args.C))
        report = {"k": args.k, "delta": args.delta, "C": args.C, "bound": _num(value)}
    elif args.kind == "erdos-nesetril":
        report = {"delta": args.delta, "bound": _num(evaluate_bounds("erdos_nesetril", delta=args.delta))}
    else:
        report = {"delta": args.delta, "bound": _num(evaluate_bounds("molloy_reed", delta=args.delta))}
    write_reports(report, args.json)
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    instances = []
    if args.family in ("subcubic", "all"):
        instances += subcubic_instances(args.seed, args.count)
    if args.family in ("general", "all"):
        instances += general_instances(args.seed, args.count)
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    failures = 0
    for inst in instances:
        g = inst.graph
        row: dict[str, Any] = {"name": inst.name, "n": g.n, "m": g.m, "max_degree": g.max_degree}
        if out_dir:
            (out_dir / f"{inst.name}.secg").write_text(write_graph_file(g, inst.emb))
        if args.check:
            t0 = time.monotonic()
            try:
                res = color_auto(g, inst.emb)
                rep = audit(g, inst.emb, SUBCUBIC if g.max_degree <= 3 else GENERAL)
                ok = res.colors_used <= res.budget and rep.ok
                row.update(colors=res.colors_used, budget=res.budget, audit="ok" if rep.ok else "FAIL")
            except ReductionError as exc:
                ok = False
                row.update(colors="-", budget="-", audit=type(exc).__name__)
            row["seconds"] = round(time.monotonic() - t0, 3)
            failures += not ok
        rows.append(row)
    report: dict[str, Any] = {"seed": args.seed, "instances": len(rows)}
    if args.check:
        report["failures"] = failures
    report["corpus"] = rows
    write_reports(report, args.json)
    return EXIT_FAIL if failures else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized commands")
    p.add_argument("--time-limit", type=float, default=argparse.SUPPRESS, help="seconds for exact search")
    return p


def _solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-colors", type=int, default=64)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="strongcolor", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="emit a generated graph with its embedding")
    gsub = gen.add_subparsers(dest="family", required=True)
    p = gsub.add_parser("ckd", parents=[common], help="odd k-cycle with d-2 leaves per cycle vertex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    gsub.add_parser("prism", parents=[common], help="triangular prism (complement of C_6)")
    p = gsub.add_parser("hex", parents=[common], help="hexagonal patch")
    p.add_argument("--rings", type=int, default=2)
    p = gsub.add_parser("drum", parents=[common], help="cubic layered drum (n=5: dodecahedron)")
    p.add_argument("--n", type=int, default=5)
    p = gsub.add_parser("subdivide", parents=[common], help="subdivide one edge or every edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--times", type=int, default=1)
    for sp in gsub.choices.values():
        sp.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", parents=[common], help="exact strong chromatic index")
    p.add_argument("file")
    p.add_argument("--certificate", help="write the witness coloring here")
    _solver_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("color", parents=[common], help="compute and verify a strong edge coloring")
    p.add_argument("file")
    p.add_argument("--mode", choices=("auto", "girth6", "subcubic", "greedy", "exact"), default="auto")
    p.add_argument("--palette", type=int, help="palette size for --mode greedy")
    p.add_argument("--certificate", help="write the coloring here")
    _solver_args(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="check a coloring certificate")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("discharge", parents=[common], help="charge table and audit")
    p.add_argument("file")
    p.add_argument("--mode", choices=(GENERAL, SUBCUBIC), default=GENERAL)
    p.add_argument("--transfers", action="store_true", help="include the transfer log")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("bounds", parents=[common], help="evaluate closed-form bounds exactly")
    p.add_argument("kind", choices=("ckd", "conjecture19", "erdos-nesetril", "molloy-reed"))
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--C", default="0", help="free constant for conjecture19")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("corpus", parents=[common], help="emit (and optionally check) the seeded corpus")
    p.add_argument("--out", help="directory for .secg files")
    p.add_argument("--count", type=int, default=120, help="instances per family")
    p.add_argument("--family", choices=("subcubic", "general", "all"), default="all")
    p.add_argument("--check", action="store_true", help="color and audit every instance")
    p.set_defaults(func=cmd_corpus)
    return parser


def _check_bounds_args(args: argparse.Namespace) -> None:
    need = {"ckd": ("k", "d"), "conjecture19": ("k", "delta")}.get(args.kind, ("delta",))
    missing = [f"--{x}" for x in need if getattr(args, x) is None]
    if missing:
        raise UsageError(f"bounds {args.kind} needs {', '.join(missing)}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", DEFAULT_SEED)
    args.time_limit = getattr(args, "time_limit", None)
    try:
        if args.command == "bounds":
            _check_bounds_args(args)
        return args.func(args)
    except (UsageError, FormatError, GraphError, PreconditionError, DischargeError, ColoringError) as exc:
        print(f"strongcolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"strongcolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReductionError as exc:
        print(f"strongcolor: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
