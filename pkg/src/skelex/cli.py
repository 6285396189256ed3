"""Command-line front end and the pure-coloring census.

Subcommands compose through the shared JSON formats on stdin/stdout:

    skelex generate cube --n 2 | skelex classify
    skelex generate surface --genus 3 --non-orientable | skelex expand

Exit codes: 0 success, 1 domain refusal (the mathematics rejects the
input), 2 input error (unreadable or malformed data).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence, TextIO

from . import classify as classify_mod
from . import duality, expansion, generators, graph as graph_mod, nests as nests_mod
from . import realize as realize_mod
from .errors import (
    CensusLimit,
    ExpansionRefused,
    FormatError,
    InvalidGraph,
    NotCombinatorialManifold,
    NotGoodColoring,
    SkelexError,
    UnsupportedDimension,
)
from .gf2 import ColorVector
from .graph import ColoredGraph

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2

DEFAULT_CENSUS_LIMIT = 16


# ---------------------------------------------------------------- census


@dataclass(frozen=True)
class CensusEntry:
    coloring: tuple[int, ...]  # color index per canonical edge
    graph: ColoredGraph
    report: classify_mod.SurfaceReport | classify_mod.HomologyReport | None
    refusal: str | None = None

    @property
    def coloring_id(self) -> str:
        return ",".join(str(c) for c in self.coloring)


def _canonical_coloring(coloring: Sequence[int], n_colors: int) -> tuple[int, ...]:
    return min(
        tuple(perm[c] for c in coloring)
        for perm in permutations(range(n_colors))
    )


def enumerate_proper_colorings(
    edges: Sequence[tuple[int, int]], vertex_count: int, n_colors: int
) -> Iterator[tuple[int, ...]]:
    """All proper edge colorings with ``n_colors`` colors, by backtracking."""
    incident: list[list[int]] = [[] for _ in range(vertex_count)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    assignment: list[int] = [-1] * len(edges)

    def conflicts(e: int, color: int) -> bool:
        u, v = edges[e]
        for w in (u, v):
            for f in incident[w]:
                if f != e and assignment[f] == color:
                    return True
        return False

    def backtrack(e: int) -> Iterator[tuple[int, ...]]:
        if e == len(edges):
            yield tuple(assignment)
            return
        for color in range(n_colors):
            if conflicts(e, color):
                continue
            assignment[e] = color
            yield from backtrack(e + 1)
            assignment[e] = -1

    yield from backtrack(0)


def _colored(edges, vertex_count, n, coloring) -> ColoredGraph:
    width = n + 1
    colored_edges = tuple(
        (u, v, ColorVector.unit(coloring[i], width))
        for i, (u, v) in enumerate(edges)
    )
    return ColoredGraph(n, vertex_count, colored_edges)


def census(
    edges: Sequence[tuple[int, int]],
    vertex_count: int,
    n: int,
    limit: int = DEFAULT_CENSUS_LIMIT,
) -> list[CensusEntry]:
    """Classify every pure coloring of an underlying regular graph.

    Colorings are deduplicated up to permutation of the n+1 colors by
    keeping the lexicographically least recoloring.  Entries come back in
    canonical order.  Refuses graphs beyond the scale guard.
    """
    if vertex_count > limit:
        raise CensusLimit(
            f"census is limited to {limit} vertices, got {vertex_count}"
        )
    valences = [0] * vertex_count
    neighbors: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count) or u == v:
            raise FormatError(f"bad edge ({u}, {v}) in underlying graph")
        valences[u] += 1
        valences[v] += 1
        neighbors[u].add(v)
        neighbors[v].add(u)
    if any(d != n + 1 for d in valences):
        raise FormatError(
            f"underlying graph is not {n + 1}-valent: valences {valences}"
        )
    seen = {0}
    stack = [0]
    while stack:
        for w in neighbors[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != vertex_count:
        raise FormatError("underlying graph is not connected")
    seen: set[tuple[int, ...]] = set()
    entries: list[CensusEntry] = []
    for coloring in enumerate_proper_colorings(edges, vertex_count, n + 1):
        canon = _canonical_coloring(coloring, n + 1)
        if canon in seen:
            continue
        seen.add(canon)
        g = _colored(edges, vertex_count, n, canon)
        outcome = expansion.full_expand(g)
        if not outcome.completed:
            entries.append(CensusEntry(canon, g, None, outcome.obstruction.reason))
            continue
        if n == 2:
            report = classify_mod.classify_surface(outcome.complex)
        else:
            report = classify_mod.homology_mod2(outcome.complex)
        entries.append(CensusEntry(canon, g, report))
    entries.sort(key=lambda e: e.coloring)
    return entries


# ----------------------------------------------------------------- I/O


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _open_out(path: str | None) -> TextIO:
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _emit(out: str | None, text: str) -> None:
    fh = _open_out(out)
    try:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")
    finally:
        if fh is not sys.stdout:
            fh.close()


def _parse_uncolored(text: str) -> tuple[list[tuple[int, int]], int, int | None]:
    """Read an underlying graph: colored files are accepted, colors dropped."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "edges" not in data or "vertices" not in data:
        raise FormatError("expected an object with 'vertices' and 'edges'")
    edges = []
    for i, item in enumerate(data["edges"]):
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise FormatError(f"edges[{i}]: expected [u, v] or [u, v, color]")
        u, v = item[0], item[1]
        if not (isinstance(u, int) and isinstance(v, int)):
            raise FormatError(f"edges[{i}]: endpoints must be integers")
        edges.append((u, v))
    n = data.get("n")
    if n is not None and not isinstance(n, int):
        raise FormatError("'n' must be an integer")
    return edges, data["vertices"], n


# ------------------------------------------------------------ renderers


def _render_surface(report: classify_mod.SurfaceReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "name": report.name,
                "orientable": report.orientable,
                "euler": report.euler,
                "genus": report.genus,
            },
            indent=1,
        )
    return (
        f"{report.name}\n"
        f"orientable: {'yes' if report.orientable else 'no'}\n"
        f"euler: {report.euler}\n"
        f"genus: {report.genus}"
    )


def _render_homology(report: classify_mod.HomologyReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "betti_mod2": list(report.betti_mod2),
                "euler": report.euler,
                "note": report.note,
            },
            indent=1,
        )
    lines = [
        "betti_mod2: (" + ", ".join(str(b) for b in report.betti_mod2) + ")",
        f"euler: {report.euler}",
    ]
    if report.note:
        lines.append(f"note: {report.note}")
    return "\n".join(lines)


# ------------------------------------------------------------- commands


def _cmd_validate(args) -> int:
    raw = _read_text(args.file)
    g = _parse_loose(raw)
    report = graph_mod.validate(g)
    if args.format == "json":
        _emit(args.out, json.dumps(
            {"valid": report.ok, "problems": list(report.problems)}, indent=1
        ))
    elif report.ok:
        _emit(args.out, "valid")
    else:
        _emit(args.out, "invalid:\n" + "\n".join(f"  {p}" for p in report.problems))
    return EXIT_OK if report.ok else EXIT_REFUSED


def _parse_loose(text: str) -> ColoredGraph:
    """Parse the graph format without the validity gate (for `validate`)."""
    try:
        return graph_mod.parse(text)
    except InvalidGraph:
        pass
    # re-build without validation to let `validate` report the problems
    data = json.loads(text)
    edges = tuple(
        (u, v, ColorVector.from_string(c)) for u, v, c in data["edges"]
    )
    return ColoredGraph(data["n"], data["vertices"], edges)


def _cmd_nests(args) -> int:
    g = graph_mod.parse(_read_text(args.file))
    dims = [args.dim] if args.dim is not None else list(range(g.n + 1))
    all_nests = {k: nests_mod.enumerate_nests(g, k) for k in dims}
    counts = nests_mod.nest_counts(g)
    if args.format == "json":
        payload = {
            "nests": [
                {
                    "dim": k,
                    "label": nests_mod.nest_label(nest),
                    "vertices": list(nest.vertex_ids),
                    "edges": list(nest.edge_ids),
                }
                for k in dims
                for nest in all_nests[k]
            ],
            "nu": list(counts),
        }
        _emit(args.out, json.dumps(payload, indent=1))
        return EXIT_OK
    lines = []
    for k in dims:
        for nest in all_nests[k]:
            vs = ",".join(str(v) for v in nest.vertex_ids)
            es = ",".join(str(e) for e in nest.edge_ids)
            lines.append(
                f"k={k} label={nests_mod.nest_label(nest)} vertices={vs} edges={es}"
            )
    lines.append("nu = (" + ", ".join(str(c) for c in counts) + ")")
    _emit(args.out, "\n".join(lines))
    return EXIT_OK


def _cmd_expand(args) -> int:
    g = graph_mod.parse(_read_text(args.file))
    outcome = expansion.full_expand(g)
    counts = outcome.complex.counts()
    if args.format == "json":
        payload = {
            "cells": list(counts),
            "euler": outcome.complex.euler(),
            "reached_dim": outcome.reached_dim,
            "completed": outcome.completed,
        }
        if outcome.obstruction is not None:
            payload["obstruction"] = outcome.obstruction.reason
            if outcome.obstruction.counts is not None:
                payload["counts"] = list(outcome.obstruction.counts)
        if args.dump:
            payload["complex"] = _dump_complex(outcome.complex)
        _emit(args.out, json.dumps(payload, indent=1))
    else:
        lines = [
            "cells: " + " ".join(str(c) for c in counts),
            f"euler: {outcome.complex.euler()}",
            f"reached dimension: {outcome.reached_dim}",
        ]
        if outcome.obstruction is not None:
            lines.append(f"refused: {outcome.obstruction.reason}")
        _emit(args.out, "\n".join(lines))
    return EXIT_OK if outcome.completed else EXIT_REFUSED


def _dump_complex(c: expansion.CellComplex) -> list[dict]:
    return [
        {
            "dim": k,
            "index": cell.index,
            "faces": list(cell.faces),
            "nest_edges": list(cell.nest.edge_ids),
            "nest_vertices": list(cell.nest.vertex_ids),
        }
        for k, cells in enumerate(c.cells_by_dim)
        for cell in cells
    ]


def _cmd_classify(args) -> int:
    g = graph_mod.parse(_read_text(args.file))
    outcome = expansion.full_expand(g)
    if not outcome.completed:
        _emit(args.out, f"refused: {outcome.obstruction.reason}")
        return EXIT_REFUSED
    if g.n == 2:
        _emit(args.out, _render_surface(
            classify_mod.classify_surface(outcome.complex), args.format
        ))
    else:
        _emit(args.out, _render_homology(
            classify_mod.homology_mod2(outcome.complex), args.format
        ))
    return EXIT_OK


def _cmd_dualize(args) -> int:
    poset = duality.parse_poset(_read_text(args.file))
    dual = duality.dual_colored_graph(poset)
    _emit(args.out, graph_mod.serialize(dual))
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.family == "cube":
        if args.n is None:
            raise FormatError("generate cube needs --n")
        g = generators.gen_cube(args.n)
    else:
        if args.genus is None:
            raise FormatError("generate surface needs --genus")
        if args.non_orientable:
            g = generators.gen_nonorientable_surface(args.genus)
        else:
            g = generators.gen_orientable_surface(args.genus)
    _emit(args.out, graph_mod.serialize(g))
    return EXIT_OK


def _cmd_census(args) -> int:
    edges, vertex_count, file_n = _parse_uncolored(_read_text(args.file))
    n = args.n if args.n is not None else file_n
    if n is None:
        raise FormatError("census needs n (from the file or --n)")
    entries = census(edges, vertex_count, n)
    if args.format == "json":
        payload = []
        for e in entries:
            item: dict = {"coloring": list(e.coloring)}
            if e.refusal is not None:
                item["refused"] = e.refusal
            elif isinstance(e.report, classify_mod.SurfaceReport):
                item["surface"] = e.report.name
                item["orientable"] = e.report.orientable
                item["euler"] = e.report.euler
            else:
                item["betti_mod2"] = list(e.report.betti_mod2)
            payload.append(item)
        _emit(args.out, json.dumps(payload, indent=1))
        return EXIT_OK
    lines = []
    for e in entries:
        if e.refusal is not None:
            lines.append(f"coloring {e.coloring_id}: refused ({e.refusal})")
        elif isinstance(e.report, classify_mod.SurfaceReport):
            lines.append(f"coloring {e.coloring_id}: {e.report.name}")
        else:
            betti = ",".join(str(b) for b in e.report.betti_mod2)
            lines.append(f"coloring {e.coloring_id}: betti_mod2=({betti})")
    lines.append(f"total: {len(entries)}")
    _emit(args.out, "\n".join(lines))
    return EXIT_OK


def _cmd_realize(args) -> int:
    g = graph_mod.parse(_read_text(args.file))
    try:
        summary = realize_mod.realizability_summary(g)
    except ExpansionRefused as exc:
        _emit(args.out, f"realizability: unknown (expansion refused: {exc})")
        return EXIT_REFUSED
    records = realize_mod.isotropy_report(g) if args.table else []
    if args.format == "json":
        payload: dict = {
            "euler": summary.euler,
            "bounds_directly": summary.bounds_directly,
            "doubling_required": summary.doubling_required,
            "fixed_points": summary.fixed_point_count,
        }
        if args.table:
            payload["isotropy"] = [
                {
                    "dim": r.nest.dim,
                    "edges": list(r.nest.edge_ids),
                    "corank": r.corank,
                    "copies": r.copies,
                    "kernel": [
                        realize_mod.render_t_vector(m, g.width)
                        for m in r.subgroup_basis
                    ],
                }
                for r in records
            ]
        _emit(args.out, json.dumps(payload, indent=1))
        return EXIT_OK
    lines = [
        f"euler: {summary.euler}",
        f"bounds directly: {'yes' if summary.bounds_directly else 'no'}",
        f"doubling required: {'yes' if summary.doubling_required else 'no'}",
        f"fixed points: {summary.fixed_point_count}",
    ]
    for record in records:
        basis = ", ".join(
            realize_mod.render_t_vector(m, g.width)
            for m in record.subgroup_basis
        ) or "0"
        lines.append(
            f"nest dim={record.nest.dim} edges={list(record.nest.edge_ids)}"
            f" corank={record.corank} copies={record.copies}"
            f" kernel=[{basis}]"
        )
    _emit(args.out, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skelex",
        description=(
            "Expand colored regular graphs into cell complexes, classify the"
            " resulting manifolds, and dualize combinatorial manifolds back"
            " into colored graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_format=True):
        p.add_argument("file", nargs="?", default=None,
                       help="input file (default: stdin)")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        if with_format:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check the colored-graph invariants")
    add_common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("nests", help="enumerate colored nests")
    add_common(p)
    p.add_argument("--dim", type=int, default=None, help="restrict to one dimension")
    p.set_defaults(func=_cmd_nests)

    p = sub.add_parser("expand", help="run the skeletal expansion")
    add_common(p)
    p.add_argument("--dump", action="store_true", help="include the full cell list")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("classify", help="classify the expanded manifold")
    add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("dualize", help="dual colored graph of a face poset")
    add_common(p, with_format=False)  # output is always the graph file format
    p.set_defaults(func=_cmd_dualize)

    p = sub.add_parser("generate", help="emit a graph family member")
    p.add_argument("family", choices=("cube", "surface"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--non-orientable", action="store_true", dest="non_orientable")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("census", help="classify all pure colorings of a graph")
    add_common(p)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("realize", help="realizability summary")
    add_common(p)
    p.add_argument("--table", action="store_true", help="per-nest isotropy table")
    p.set_defaults(func=_cmd_realize)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, InvalidGraph, UnsupportedDimension, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (
        ExpansionRefused,
        NotGoodColoring,
        NotCombinatorialManifold,
        CensusLimit,
    ) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except SkelexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
