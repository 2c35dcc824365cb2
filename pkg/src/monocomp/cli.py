"""Command-line front end: generators, verification, bounds, search, circuits.

Exit codes: 0 on success (for `verify`: every check passed), 1 when a
check that must hold for every coloring fails (always a bug worth a loud
report), 2 on usage or input errors.  All output is deterministic given the
input bytes and the seed; exact integers and rationals render as decimal /
"p/q" strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path

from .bounds import Theorem1Trace, lower_bound, theorem1_trace
from .circuits import Circuit, best_mono_circuit, eulerian_circuit, parity_fix
from .constructions import (
    affine_coloring,
    density_split,
    k3_initial_nice,
    k3_optimize,
)
from .graphs import (
    ColoredCompleteGraph,
    ColoringFormatError,
    MultipartiteHost,
    TheoremCheckError,
    color_class,
    components_of,
    parse_coloring,
    render_coloring,
)
from .inequalities import number_str
from .search import brute_force_M, random_coloring


@dataclass(frozen=True)
class ColorSummary:
    """Edge-bearing components of one color class, plus its isolated count."""

    color: int
    components: tuple[tuple[int, int], ...]  # (vertex count, edge count)
    isolated: int


@dataclass(frozen=True)
class VerificationReport:
    """Recomputed component tables, bound values, and pass/fail checks."""

    n: int
    k: int
    full: bool
    colors: tuple[ColorSummary, ...]
    max_color: int
    max_edges: int
    square_guarantee: Fraction
    strong_guarantee: Fraction | int | None
    checks: tuple[tuple[str, bool], ...]
    trace: Theorem1Trace | None

    @property
    def all_ok(self) -> bool:
        return all(ok for _, ok in self.checks)


def build_report(
    coloring: ColoredCompleteGraph, with_trace: bool = False
) -> VerificationReport:
    n, k = coloring.n, coloring.k
    total = comb(n, 2)
    summaries = []
    max_color, max_edges = 0, 0
    for c in range(1, k + 1):
        comps = components_of(color_class(coloring, c))
        bearing = sorted(
            (
                (len(comp.vertices), comp.edge_count)
                for comp in comps
                if comp.edge_count
            ),
            key=lambda t: (-t[1], -t[0]),
        )
        isolated = sum(1 for comp in comps if not comp.edge_count)
        summaries.append(
            ColorSummary(color=c, components=tuple(bearing), isolated=isolated)
        )
        top = max((comp.edge_count for comp in comps), default=0)
        if max_color == 0 or top > max_edges:
            max_color, max_edges = c, top
    square = Fraction(total, k * k)
    strong = lower_bound(n, k) if k >= 2 and n >= 2 else None
    checks: list[tuple[str, bool]] = []
    trace = None
    if coloring.is_full and n >= 2:
        checks.append(("max_component >= C(n,2)/k^2", max_edges >= square))
        if strong is not None:
            checks.append(("max_component >= strong guarantee", max_edges >= strong))
        if with_trace:
            trace = theorem1_trace(coloring) if k >= 2 else None
            if trace is not None:
                checks.append(("vertex prefix inequalities", trace.all_prefix_ok))
                if trace.smoothing_applicable:
                    checks.append(
                        ("component pair-count bound", bool(trace.smoothing_ok))
                    )
    return VerificationReport(
        n=n,
        k=k,
        full=coloring.is_full,
        colors=tuple(summaries),
        max_color=max_color,
        max_edges=max_edges,
        square_guarantee=square,
        strong_guarantee=strong,
        checks=tuple(checks),
        trace=trace,
    )


def trace_json(trace: Theorem1Trace) -> dict:
    return {
        "n": number_str(trace.n),
        "k": number_str(trace.k),
        "dense_color": number_str(trace.dense_color),
        "x": number_str(trace.x),
        "z": number_str(trace.z),
        "delta": repr(trace.delta),
        "component_vertex_counts": [
            number_str(c) for c in trace.component_vertex_counts
        ],
        "prefix_checks": [
            {
                "j": number_str(c.j),
                "prefix": number_str(c.prefix),
                "bound": repr(c.bound),
                "ok": c.ok,
            }
            for c in trace.prefix_checks
        ],
        "all_prefix_ok": trace.all_prefix_ok,
        "pair_sum": number_str(trace.pair_sum),
        "smoothing_applicable": trace.smoothing_applicable,
        "smoothing_bound": (
            repr(trace.smoothing_bound) if trace.smoothing_bound is not None else None
        ),
        "smoothing_ok": trace.smoothing_ok,
    }


def render_report(report: VerificationReport, fmt: str = "text") -> str:
    """Render a report as a human-readable table or schema-stable JSON."""
    if fmt == "json":
        doc = {
            "n": number_str(report.n),
            "k": number_str(report.k),
            "full": report.full,
            "colors": [
                {
                    "color": number_str(s.color),
                    "components": [
                        {"vertices": number_str(v), "edges": number_str(e)}
                        for v, e in s.components
                    ],
                    "isolated": number_str(s.isolated),
                }
                for s in report.colors
            ],
            "max_component": {
                "color": number_str(report.max_color),
                "edges": number_str(report.max_edges),
            },
            "bounds": {
                "square_guarantee": number_str(report.square_guarantee),
                "strong_guarantee": (
                    number_str(report.strong_guarantee)
                    if report.strong_guarantee is not None
                    else None
                ),
            },
            "checks": [{"name": name, "ok": ok} for name, ok in report.checks],
            "trace": trace_json(report.trace) if report.trace else None,
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"coloring: n={report.n} k={report.k} full={'yes' if report.full else 'no'}"]
    for s in report.colors:
        comps = " ".join(f"{v}v/{e}e" for v, e in s.components) or "-"
        lines.append(f"color {s.color}: {comps}  isolated={s.isolated}")
    lines.append(f"max component: color={report.max_color} edges={report.max_edges}")
    lines.append(f"square guarantee C(n,2)/k^2 = {number_str(report.square_guarantee)}")
    if report.strong_guarantee is not None:
        lines.append(f"strong guarantee = {number_str(report.strong_guarantee)}")
    if report.trace is not None:
        t = report.trace
        lines.append(
            f"trace: dense_color={t.dense_color} x={number_str(t.x)} "
            f"z={number_str(t.z)} delta={t.delta:.6f} m={len(t.component_vertex_counts)}"
        )
    for name, ok in report.checks:
        lines.append(f"check {name}: {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _write_output(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _read_coloring(path: str) -> ColoredCompleteGraph:
    return parse_coloring(Path(path).read_text())


def _parts_list(raw: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("parts must be comma-separated integers")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("part sizes must be positive")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocomp",
        description="Monochromatic components of edge-colored complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate colorings in the text format")
    gsub = gen.add_subparsers(dest="generator", required=True)
    g_k3 = gsub.add_parser("k3", help="balanced four-block three-coloring")
    g_k3.add_argument("--n", type=int, required=True)
    g_k3.add_argument("--output")
    g_aff = gsub.add_parser("affine", help="line-geometry (q+1)-coloring")
    g_aff.add_argument("--q", type=int, required=True)
    g_aff.add_argument("--n", type=int, required=True)
    g_aff.add_argument("--output")
    g_rand = gsub.add_parser("random", help="seeded uniform coloring")
    g_rand.add_argument("--n", type=int, required=True)
    g_rand.add_argument("--k", type=int, required=True)
    g_rand.add_argument("--seed", type=int, required=True)
    g_rand.add_argument("--output")
    g_split = gsub.add_parser(
        "density-split", help="matching-slice subgraph of a multipartite host"
    )
    g_split.add_argument("--parts", type=_parts_list, required=True)
    g_split.add_argument("--k", type=int, required=True)
    g_split.add_argument("--output")

    ver = sub.add_parser("verify", help="recompute components and check bounds")
    ver.add_argument("--input", required=True)
    ver.add_argument("--trace", action="store_true")
    ver.add_argument("--json", action="store_true")

    bnd = sub.add_parser("bound", help="guaranteed component edge count")
    bnd.add_argument("--n", type=int, required=True)
    bnd.add_argument("--k", type=int, required=True)
    bnd.add_argument("--json", action="store_true")

    sea = sub.add_parser("search", help="exhaustive minimax at tiny n")
    sea.add_argument("--n", type=int, required=True)
    sea.add_argument("--k", type=int, required=True)
    sea.add_argument("--jobs", type=int, default=1)

    tra = sub.add_parser("trace", help="densest-color diagnostics")
    tra.add_argument("--input", required=True)

    cir = sub.add_parser("circuit", help="longest monochromatic circuit")
    cir.add_argument("--input", required=True)
    cir.add_argument("--color", type=int)
    cir.add_argument("--json", action="store_true")
    return parser


def _cmd_gen(args) -> int:
    if args.generator == "k3":
        coloring = k3_optimize(k3_initial_nice(args.n))
    elif args.generator == "affine":
        coloring = affine_coloring(args.q, args.n)
    elif args.generator == "random":
        coloring = random_coloring(args.n, args.k, args.seed)
    else:  # density-split: emit the subgraph as a 1-color partial coloring
        host = MultipartiteHost(args.parts)
        sub = density_split(host, args.k)
        coloring = ColoredCompleteGraph.from_pairs(
            host.n, 1, {e: 1 for e in sub.edges}
        )
    _write_output(render_coloring(coloring), args.output)
    return 0


def _cmd_verify(args) -> int:
    coloring = _read_coloring(args.input)
    report = build_report(coloring, with_trace=args.trace)
    sys.stdout.write(render_report(report, "json" if args.json else "text"))
    return 0 if report.all_ok else 1


def _cmd_bound(args) -> int:
    value = lower_bound(args.n, args.k)
    if args.json:
        doc = {
            "n": number_str(args.n),
            "k": number_str(args.k),
            "bound": number_str(value),
        }
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        sys.stdout.write(number_str(value) + "\n")
    return 0


def _cmd_search(args) -> int:
    result = brute_force_M(args.n, args.k, jobs=args.jobs)
    doc = {
        "n": number_str(args.n),
        "k": number_str(args.k),
        "value": number_str(result.value),
        "nodes": number_str(result.nodes),
        "witness": render_coloring(result.witness),
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_trace(args) -> int:
    coloring = _read_coloring(args.input)
    trace = theorem1_trace(coloring)
    sys.stdout.write(json.dumps(trace_json(trace), indent=2) + "\n")
    ok = trace.all_prefix_ok and trace.smoothing_ok is not False
    return 0 if ok else 1


def _best_circuit_for_color(coloring: ColoredCompleteGraph, c: int) -> Circuit:
    fix = parity_fix(color_class(coloring, c))
    best: Circuit | None = None
    for comp in components_of(fix.trimmed):
        if not comp.edge_count:
            continue
        circuit = eulerian_circuit(comp)
        if best is None or circuit.length > best.length:
            best = circuit
    return best if best is not None else Circuit((1,), 0)


def _cmd_circuit(args) -> int:
    coloring = _read_coloring(args.input)
    if not coloring.is_full:
        raise ValueError("circuit extraction requires a full coloring")
    if args.color is not None:
        if not (1 <= args.color <= coloring.k):
            raise ValueError(f"color {args.color} out of range 1..{coloring.k}")
        color, circuit = args.color, _best_circuit_for_color(coloring, args.color)
    else:
        color, circuit = best_mono_circuit(coloring)
    if args.json:
        doc = {
            "color": number_str(color),
            "length": number_str(circuit.length),
            "vertices": [number_str(v) for v in circuit.vertices],
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(f"color {color} length {circuit.length}\n")
        sys.stdout.write(" ".join(str(v) for v in circuit.vertices) + "\n")
    return 0


def run(argv: list[str] | None = None) -> int:
    """Dispatch a command line; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    handlers = {
        "gen": _cmd_gen,
        "verify": _cmd_verify,
        "bound": _cmd_bound,
        "search": _cmd_search,
        "trace": _cmd_trace,
        "circuit": _cmd_circuit,
    }
    try:
        return handlers[args.command](args)
    except ColoringFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TheoremCheckError, AssertionError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
