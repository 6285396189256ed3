"""Colored regular graphs: validity, purity, goodness and the connection.

A graph carries ``n`` and a list of edges ``(u, v, color)`` where colors are
vectors of GF(2)^(n+1).  Edge ids are list positions, incidence is by
edge-end, so parallel edges are first-class citizens; loops are rejected
because a loop would put two dependent color slots on one vertex.

Graph file format (JSON, UTF-8)::

    {"n": 2, "vertices": 8, "edges": [[0, 1, "100"], ...]}

Color strings have length n+1, leftmost character = x0 coefficient.  The
edge array order defines edge ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionMismatch, FormatError, InvalidGraph, NotGoodColoring
from .gf2 import ColorVector, congruent_mod, span

Edge = tuple[int, int, ColorVector]


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def width(self) -> int:
        return self.n + 1

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v, _) in enumerate(self.edges):
            if 0 <= u < self.vertex_count:
                inc[u].append(idx)
            if 0 <= v < self.vertex_count and v != u:
                inc[v].append(idx)
        return tuple(tuple(ids) for ids in inc)

    def edges_at(self, v: int) -> tuple[int, ...]:
        return self._incidence[v]

    def ends(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def color(self, e: int) -> ColorVector:
        return self.edges[e][2]

    def other_end(self, e: int, v: int) -> int:
        u, w, _ = self.edges[e]
        return w if v == u else u

    def color_image(self) -> frozenset[ColorVector]:
        return frozenset(c for _, _, c in self.edges)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for e in self.edges_at(v):
                w = self.other_end(e, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...]


def validate(g: ColoredGraph) -> ValidationReport:
    """Check every graph invariant, reporting each violation found."""
    problems: list[str] = []
    if g.n < 1:
        problems.append(f"n must be >= 1, got {g.n}")
    if g.vertex_count < 1:
        problems.append(f"vertex count must be >= 1, got {g.vertex_count}")
    for idx, (u, v, c) in enumerate(g.edges):
        if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
            problems.append(f"edge {idx}: endpoint out of range ({u}, {v})")
        if u == v:
            problems.append(f"edge {idx}: loop at vertex {u} (loops are impossible)")
        if c.width != g.width:
            problems.append(
                f"edge {idx}: color width {c.width} differs from n+1 = {g.width}"
            )
        if c.is_zero:
            problems.append(f"edge {idx}: zero color")
    if problems:
        return ValidationReport(False, tuple(problems))

    for v in range(g.vertex_count):
        incident = g.edges_at(v)
        if len(incident) != g.width:
            problems.append(
                f"vertex {v}: valence {len(incident)}, expected {g.width}"
            )
            continue
        colors = [g.color(e) for e in incident]
        if span(colors).dim != g.width:
            problems.append(
                f"vertex {v}: incident colors {[str(c) for c in colors]}"
                " are linearly dependent"
            )
    if not g.is_connected():
        problems.append("graph is not connected")
    return ValidationReport(not problems, tuple(problems))


def require_valid(g: ColoredGraph) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidGraph(list(report.problems))


def is_pure(g: ColoredGraph) -> bool:
    """True iff the coloring uses exactly n+1 distinct vectors."""
    require_valid(g)
    return len(g.color_image()) == g.width


@dataclass(frozen=True)
class Connection:
    """Per-edge bijections between the edge stars of its two endpoints.

    ``maps[(e, v)]`` sends each edge at v to its partner at the other end
    of e; colors of partners are congruent modulo the color of e.
    """

    maps: dict[tuple[int, int], dict[int, int]]

    def across(self, e: int, tail: int) -> dict[int, int]:
        return self.maps[(e, tail)]


@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    connection: Connection | None
    witness: tuple[int, int, int] | None  # (edge e1, vertex v, edge e0 at v)


def check_good(g: ColoredGraph) -> GoodnessReport:
    """Decide goodness and build the connection when it exists.

    For every edge e1 = (v, w) and every e0 at v there must be exactly one
    e2 at w whose color is congruent to e0's modulo e1's; the collected
    partner maps form the connection.
    """
    require_valid(g)
    maps: dict[tuple[int, int], dict[int, int]] = {}
    for e1, (u1, v1, c1) in enumerate(g.edges):
        for tail, head in ((u1, v1), (v1, u1)):
            table: dict[int, int] = {}
            for e0 in g.edges_at(tail):
                c0 = g.color(e0)
                partners = [
                    e2 for e2 in g.edges_at(head)
                    if congruent_mod(c0, g.color(e2), c1)
                ]
                if len(partners) != 1:
                    return GoodnessReport(False, None, (e1, tail, e0))
                table[e0] = partners[0]
            maps[(e1, tail)] = table
    return GoodnessReport(True, Connection(maps), None)


def is_good(g: ColoredGraph) -> bool:
    return check_good(g).good


def connection(g: ColoredGraph) -> Connection:
    report = check_good(g)
    if not report.good:
        raise NotGoodColoring(f"coloring is not good, witness {report.witness}")
    assert report.connection is not None
    return report.connection


def connected_sum(
    g1: ColoredGraph,
    e1: int,
    g2: ColoredGraph,
    e2: int,
    crossing: str = "straight",
) -> ColoredGraph:
    """Cut e1 and e2 open and reconnect the four ends across the graphs.

    ``crossing`` picks the reconnection pattern: "straight" joins
    u1-u2 and v1-v2, "crossed" joins u1-v2 and v1-u2.  Both edges must
    carry the same color and the graphs the same n.
    """
    if g1 is g2:
        raise ValueError("connected sum needs two distinct graph instances")
    if crossing not in ("straight", "crossed"):
        raise ValueError(f"unknown crossing pattern {crossing!r}")
    require_valid(g1)
    require_valid(g2)
    if g1.n != g2.n:
        raise DimensionMismatch(f"cannot sum graphs with n={g1.n} and n={g2.n}")
    u1, v1, c1 = g1.edges[e1]
    u2, v2, c2 = g2.edges[e2]
    if c1 != c2:
        raise ValueError(
            f"edge colors differ: {c1} vs {c2}; connected sum needs equal colors"
        )
    shift = g1.vertex_count
    edges: list[Edge] = [e for i, e in enumerate(g1.edges) if i != e1]
    edges += [
        (u + shift, v + shift, c) for i, (u, v, c) in enumerate(g2.edges) if i != e2
    ]
    if crossing == "straight":
        edges.append((u1, u2 + shift, c1))
        edges.append((v1, v2 + shift, c1))
    else:
        edges.append((u1, v2 + shift, c1))
        edges.append((v1, u2 + shift, c1))
    out = ColoredGraph(g1.n, g1.vertex_count + g2.vertex_count, tuple(edges))
    report = validate(out)
    assert report.ok, f"connected sum produced an invalid graph: {report.problems}"
    return canonicalize(out)


def canonicalize(g: ColoredGraph) -> ColoredGraph:
    """Normalize endpoint order and sort edges into the canonical order.

    Canonical order is lexicographic by (min endpoint, max endpoint, color
    bits); parallel copies keep their relative order.
    """
    normalized = [(min(u, v), max(u, v), c) for u, v, c in g.edges]
    normalized.sort(key=lambda e: (e[0], e[1], str(e[2])))
    return ColoredGraph(g.n, g.vertex_count, tuple(normalized))


def parse(text: str) -> ColoredGraph:
    """Parse the JSON graph format; malformed input gets field diagnostics."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    for field in ("n", "vertices", "edges"):
        if field not in data:
            raise FormatError(f"missing field {field!r}")
    n, vertices, raw_edges = data["n"], data["vertices"], data["edges"]
    if not isinstance(n, int) or not isinstance(vertices, int):
        raise FormatError("'n' and 'vertices' must be integers")
    if not isinstance(raw_edges, list):
        raise FormatError("'edges' must be an array")
    edges: list[Edge] = []
    for i, item in enumerate(raw_edges):
        if not (isinstance(item, list) and len(item) == 3):
            raise FormatError(f"edges[{i}]: expected [u, v, colorstring]")
        u, v, color_text = item
        if not (isinstance(u, int) and isinstance(v, int) and isinstance(color_text, str)):
            raise FormatError(f"edges[{i}]: expected [int, int, str]")
        try:
            c = ColorVector.from_string(color_text)
        except ValueError as exc:
            raise FormatError(f"edges[{i}]: {exc}") from exc
        if c.width != n + 1:
            raise FormatError(
                f"edges[{i}]: color string length {c.width}, expected n+1 = {n + 1}"
            )
        edges.append((u, v, c))
    g = ColoredGraph(n, vertices, tuple(edges))
    require_valid(g)
    return g


def serialize(g: ColoredGraph) -> str:
    """Emit the canonical JSON form (canonical edge order)."""
    c = canonicalize(g)
    payload = {
        "n": c.n,
        "vertices": c.vertex_count,
        "edges": [[u, v, str(col)] for u, v, col in c.edges],
    }
    return json.dumps(payload, indent=1)


def color_isomorphic(g1: ColoredGraph, g2: ColoredGraph) -> bool:
    """Is there a vertex bijection matching all edges color-for-color?

    Plain backtracking; meant for desk-scale graphs.  Colors are compared
    as-is (no basis permutation).
    """
    if (g1.n, g1.vertex_count, g1.edge_count) != (g2.n, g2.vertex_count, g2.edge_count):
        return False

    def signature(g: ColoredGraph, v: int) -> tuple:
        return tuple(sorted(str(g.color(e)) for e in g.edges_at(v)))

    sig2: dict[tuple, list[int]] = {}
    for v in range(g2.vertex_count):
        sig2.setdefault(signature(g2, v), []).append(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for e in g1.edges_at(v):
            u = g1.other_end(e, v)
            if u in mapping:
                c = str(g1.color(e))
                count1 = sum(
                    1 for f in g1.edges_at(v)
                    if g1.other_end(f, v) == u and str(g1.color(f)) == c
                )
                count2 = sum(
                    1 for f in g2.edges_at(w)
                    if g2.other_end(f, w) == mapping[u] and str(g2.color(f)) == c
                )
                if count1 != count2:
                    return False
        return True

    order = sorted(range(g1.vertex_count), key=lambda v: signature(g1, v))

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in sig2.get(signature(g1, v), []):
            if w in used:
                continue
            if not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)
