"""Command-line front end.

Exit status: 0 success, 2 bad input, 3 capability refusal, 4 verification
mismatch, 5 resource or overflow limit.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .counter import Capability, CycleReport, auto_lengths, capability, count_cycles
from .errors import (CapabilityRefused, CycleCountError, GraphInputError, InfeasibleSpec,
                     NonDivisibleTrace, ResourceLimit, RetriesExhausted)
from .generate import KINDS, GenSpec, generate
from .graph import BipartiteGraph, classify, girth
from .io import ALIST, EDGELIST, read_graph, write_graph
from .oracle import DEFAULT_PATH_BUDGET, backtrack_cycle_count
from .traces import exact_traces

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_REFUSED = 3
EXIT_MISMATCH = 4
EXIT_RESOURCE = 5


class VerificationMismatch(CycleCountError):
    pass


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc))
    else:
        print(text)


def _load(args) -> BipartiteGraph:
    return read_graph(args.input, args.format)


def _parse_lengths(spec: str) -> Optional[list[int]]:
    if spec == "auto":
        return None
    try:
        lengths = [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError:
        raise GraphInputError(f"--lengths expects 'auto' or a comma list, got {spec!r}") from None
    if not lengths or any(i < 1 for i in lengths):
        raise GraphInputError(f"--lengths needs positive integers, got {spec!r}")
    return lengths


def _girth_text(g: Optional[int]) -> str:
    return "acyclic" if g is None else str(g)


def report_document(graph: BipartiteGraph, report: CycleReport, elapsed: float) -> dict:
    """The JSON-ready form of a report.  Every count is a Python int."""
    return {
        "n": graph.n,
        "m": graph.m,
        "edges": graph.edge_count,
        "girth": report.girth,
        "class": str(report.graph_class),
        "degrees": {"u": list(report.profile.u_degrees), "w": list(report.profile.w_degrees)},
        "counts": {str(i): int(c) for i, c in sorted(report.counts.items())},
        "traces": ({str(k): int(v) for k, v in report.traces.items()}
                   if report.traces is not None else {}),
        "methods": {str(i): m for i, m in sorted(report.methods.items())},
        "capability": {str(i): v.value for i, v in sorted(report.refused.items())},
        "seconds": round(elapsed, 6),
    }


def cmd_count(args) -> int:
    graph = _load(args)
    lengths = _parse_lengths(args.lengths)
    start = time.perf_counter()
    auto = lengths is None
    if auto:
        _, cls = classify(graph)
        g = girth(graph)
        # nothing countable: still report the verdicts for g, g+2, g+4
        lengths = auto_lengths(cls, g) or [g, g + 2, g + 4]
    report = count_cycles(graph, lengths)
    doc = report_document(graph, report, time.perf_counter() - start)
    lines = [f"class {doc['class']}  girth {_girth_text(report.girth)}"]
    for i, c in sorted(report.counts.items()):
        lines.append(f"N_{i} = {c}    [{report.methods[i]}]")
    for i, v in sorted(report.refused.items()):
        lines.append(f"N_{i}: refused, {v.describe()}")
    _emit(args, doc, "\n".join(lines))
    if report.refused and not auto:
        first = min(report.refused)
        print(f"error: length {first} refused: {report.refused[first].describe()}",
              file=sys.stderr)
        return EXIT_REFUSED
    return EXIT_OK


def cmd_girth(args) -> int:
    graph = _load(args)
    g = girth(graph)
    _, cls = classify(graph)
    _emit(args, {"girth": g, "class": str(cls)}, f"girth {_girth_text(g)}  class {cls}")
    return EXIT_OK


def cmd_traces(args) -> int:
    graph = _load(args)
    tv = exact_traces(graph, args.kmax, method=args.method)
    _emit(args, {"traces": {str(k): int(v) for k, v in tv.items()}},
          "\n".join(f"tr(A^{k}) = {v}" for k, v in tv.items()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    graph = _load(args)
    counts = backtrack_cycle_count(graph, args.max_len, args.budget)
    _emit(args, {"counts": {str(i): c for i, c in counts.items()}},
          "\n".join(f"N_{i} = {c}" for i, c in counts.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = _load(args)
    _, cls = classify(graph)
    g = girth(graph)
    lengths = [i for i in range(4, args.max_len + 1, 2)
               if capability(cls, g, i) is Capability.SUPPORTED]
    oracle = backtrack_cycle_count(graph, args.max_len, args.budget)
    spectral = count_cycles(graph, lengths).counts if lengths else {}
    rows, bad = [], []
    for i in range(4, args.max_len + 1, 2):
        if i in spectral:
            ok = spectral[i] == oracle[i]
            if not ok:
                bad.append(i)
            rows.append({"length": i, "spectral": spectral[i], "oracle": oracle[i],
                         "match": ok})
        else:
            rows.append({"length": i, "spectral": None, "oracle": oracle[i],
                         "match": None, "capability": capability(cls, g, i).value})
    doc = {"girth": g, "class": str(cls), "checks": rows, "ok": not bad}
    text = [f"class {cls}  girth {_girth_text(g)}"]
    for r in rows:
        if r["match"] is None:
            text.append(f"N_{r['length']}: oracle {r['oracle']}, spectral skipped "
                        f"({r['capability']})")
        else:
            flag = "ok" if r["match"] else "MISMATCH"
            text.append(f"N_{r['length']}: spectral {r['spectral']}, oracle {r['oracle']}  {flag}")
    _emit(args, doc, "\n".join(text))
    if bad:
        raise VerificationMismatch(f"lengths {bad} disagree")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "complete":
        spec = GenSpec.complete(args.n, args.m)
    elif args.kind == "biregular":
        spec = GenSpec.biregular(args.n, args.dv, args.dc, args.seed, args.min_girth)
    elif args.kind == "variable-regular":
        spec = GenSpec.variable_regular(args.n, args.dv, (args.wmin, args.wmax),
                                        args.seed, args.min_girth)
    else:
        spec = GenSpec.irregular(args.n, args.m, args.p, args.seed, args.min_girth)
    graph = generate(spec)
    fmt = args.format or (ALIST if str(args.out).endswith(".alist") else EDGELIST)
    write_graph(graph, args.out, fmt)
    print(f"wrote {graph.n}x{graph.m} graph with {graph.edge_count} edges to {args.out}",
          file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tannercycles",
        description="Exact short-cycle counts of bipartite graphs from adjacency traces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", "-i", required=True, help="graph file (.alist or .el)")
        p.add_argument("--format", choices=(ALIST, EDGELIST),
                       help="override format detection by extension")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = graph_command("count", cmd_count, "cycle counts via traces and degrees")
    p.add_argument("--lengths", default="auto",
                   help="comma-separated lengths, or 'auto' for the supported g, g+2, g+4")
    graph_command("girth", cmd_girth, "girth and regularity class")
    p = graph_command("traces", cmd_traces, "exact tr(A^k) for k = 1..kmax")
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--method", choices=("norm", "direct"), default="norm")
    for name, func, text in (("oracle", cmd_oracle, "brute-force cycle counts by backtracking"),
                             ("verify", cmd_verify, "compare spectral counts with the oracle")):
        p = graph_command(name, func, text)
        p.add_argument("--max-len", type=int, default=8)
        p.add_argument("--budget", type=int, default=DEFAULT_PATH_BUDGET,
                       help="give up after this many partial paths")

    p = sub.add_parser("gen", help="write a seeded random graph")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True, help="number of variable nodes")
    p.add_argument("--m", type=int, help="number of check nodes (complete, irregular)")
    p.add_argument("--dv", type=int, help="variable degree")
    p.add_argument("--dc", type=int, help="check degree (biregular)")
    p.add_argument("--wmin", type=int, help="smallest check degree (variable-regular)")
    p.add_argument("--wmax", type=int, help="largest check degree (variable-regular)")
    p.add_argument("--p", type=float, help="edge probability (irregular)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-girth", type=int)
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--format", choices=(ALIST, EDGELIST))
    p.set_defaults(func=cmd_gen, json=False)
    return parser


def _require(args) -> None:
    need = {"complete": ("m",), "biregular": ("dv", "dc"),
            "variable-regular": ("dv", "wmin", "wmax"), "irregular": ("m", "p")}
    missing = [f"--{k}" for k in need[args.kind] if getattr(args, k) is None]
    if missing:
        raise InfeasibleSpec(f"--kind {args.kind} needs {' '.join(missing)}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            _require(args)
        return args.func(args)
    except CapabilityRefused as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (VerificationMismatch, NonDivisibleTrace) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphInputError, InfeasibleSpec, RetriesExhausted, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
