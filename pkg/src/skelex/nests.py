"""Colored nests: growth from seeds, enumeration, counts and labels.

A k-nest is a maximal connected subgraph whose edge colors span a
k-dimensional subspace.  Any k edges sharing a vertex have independent
colors (validity), so they seed a unique nest: the closure that keeps
absorbing incident edges whose color stays inside the seed span.

Nests are deduplicated by their canonical edge set, never by color,
since distinct nests may share a color subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UnsupportedDimension
from .gf2 import Subspace, span
from .graph import ColoredGraph, require_valid


@dataclass(frozen=True)
class Nest:
    edge_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]
    color: Subspace

    @property
    def dim(self) -> int:
        return self.color.dim

    def key(self) -> tuple:
        return (self.edge_ids, self.vertex_ids)

    def contains(self, other: "Nest") -> bool:
        """Subgraph inclusion: the face relation between nests."""
        if other.dim == 0:
            return other.vertex_ids[0] in self.vertex_ids
        return set(other.edge_ids) <= set(self.edge_ids)


def grow_nest(
    g: ColoredGraph,
    seed_edges: tuple[int, ...] | list[int],
    vertex: int | None = None,
) -> Nest:
    """The unique nest containing the seed edges (or the vertex, if none).

    Seeds must share a common vertex; an empty seed list with ``vertex``
    grows the 0-nest at that vertex.
    """
    seeds = tuple(seed_edges)
    if not seeds:
        if vertex is None:
            raise ValueError("empty seed needs an explicit vertex for the 0-nest")
        return Nest((), (vertex,), span([], width=g.width))
    if len(set(seeds)) != len(seeds):
        raise ValueError(f"seed edges {seeds} contain duplicates")
    shared = set(g.ends(seeds[0]))
    for e in seeds[1:]:
        shared &= set(g.ends(e))
    if not shared:
        raise ValueError(f"seed edges {seeds} do not share a common vertex")

    target = span([g.color(e) for e in seeds])
    # breadth-first closure over edges whose color stays inside the span
    edge_set = set(seeds)
    vertex_set: set[int] = set()
    frontier: list[int] = []
    for e in seeds:
        for v in g.ends(e):
            if v not in vertex_set:
                vertex_set.add(v)
                frontier.append(v)
    while frontier:
        v = frontier.pop()
        for e in g.edges_at(v):
            if e in edge_set or not target.contains_mask(g.color(e).mask):
                continue
            edge_set.add(e)
            w = g.other_end(e, v)
            if w not in vertex_set:
                vertex_set.add(w)
                frontier.append(w)
    return Nest(tuple(sorted(edge_set)), tuple(sorted(vertex_set)), target)


def enumerate_nests(g: ColoredGraph, k: int) -> list[Nest]:
    """All distinct k-nests, grown from every k-subset of edges at every vertex.

    Requires 0 <= k <= n.  On good colorings every k-nest arises this way
    exactly once per (vertex, seed subset) it contains.
    """
    require_valid(g)
    if not 0 <= k <= g.n:
        raise UnsupportedDimension(f"nest dimension {k} outside 0..{g.n}")
    if k == 0:
        return [grow_nest(g, (), vertex=v) for v in range(g.vertex_count)]
    if k == 1:
        return [
            Nest((e,), tuple(sorted(g.ends(e))), span([g.color(e)]))
            for e in range(g.edge_count)
        ]
    seen: dict[tuple, Nest] = {}
    through: list[list[Nest]] = [[] for _ in range(g.vertex_count)]
    for v in range(g.vertex_count):
        for seeds in combinations(g.edges_at(v), k):
            # a grown closure is maximal, so a known nest through v holding
            # the seeds is exactly what regrowth would return
            if any(set(seeds) <= set(n.edge_ids) for n in through[v]):
                continue
            nest = grow_nest(g, seeds)
            if nest.key() not in seen:
                seen[nest.key()] = nest
                for w in nest.vertex_ids:
                    through[w].append(nest)
    return sorted(seen.values(), key=Nest.key)


def nest_counts(g: ColoredGraph) -> tuple[int, ...]:
    """(nu_0, ..., nu_n): the number of k-nests for each dimension."""
    return tuple(len(enumerate_nests(g, k)) for k in range(g.n + 1))


def _factor(mask: int, width: int) -> str:
    terms = [f"x{i}" for i in range(width) if (mask >> i) & 1]
    if len(terms) == 1:
        return terms[0]
    return "(" + "+".join(terms) + ")"


def nest_label(nest: Nest) -> str:
    """Square-free monomial label of the nest's color subspace.

    Canonical-basis factors joined by a middle dot, e.g. "x0·x1·x2"; the
    label depends only on the subspace, never on the spanning set used.
    """
    if nest.dim == 0:
        return "1"
    return "·".join(_factor(m, nest.color.width) for m in nest.color.basis)


@dataclass(frozen=True)
class RegularityReport:
    ok: bool
    failures: tuple[tuple[int, tuple[int, ...], int, int], ...]
    # entries: (nest dim, nest edge ids, vertex, valence found)


def regularity_check(g: ColoredGraph) -> RegularityReport:
    """Verify every k-nest is a connected regular k-valent subgraph.

    Passes for every nest exactly when the coloring is good; on failure
    each offending (nest, vertex) pair is reported with the valence seen.
    """
    require_valid(g)
    failures: list[tuple[int, tuple[int, ...], int, int]] = []
    for k in range(g.n + 1):
        for nest in enumerate_nests(g, k):
            edge_set = set(nest.edge_ids)
            for v in nest.vertex_ids:
                valence = sum(1 for e in g.edges_at(v) if e in edge_set)
                if valence != k:
                    failures.append((k, nest.edge_ids, v, valence))
    return RegularityReport(not failures, tuple(failures))


@dataclass(frozen=True)
class NestComplex:
    """Nests organized by dimension with the inclusion face relation."""

    nests_by_dim: tuple[tuple[Nest, ...], ...]
    faces: dict[tuple[int, int], tuple[int, ...]]
    # (dim, index) -> indices of its (dim-1)-dimensional faces

    def nest(self, dim: int, index: int) -> Nest:
        return self.nests_by_dim[dim][index]


def nest_complex(g: ColoredGraph, top: int | None = None) -> NestComplex:
    """Enumerate nests up to dimension ``top`` (default n) with face links."""
    if top is None:
        top = g.n
    by_dim = [tuple(enumerate_nests(g, k)) for k in range(top + 1)]
    faces: dict[tuple[int, int], tuple[int, ...]] = {}
    for k in range(1, top + 1):
        lower = by_dim[k - 1]
        for i, nest in enumerate(by_dim[k]):
            faces[(k, i)] = tuple(
                j for j, cand in enumerate(lower) if nest.contains(cand)
            )
    for i in range(len(by_dim[0])):
        faces[(0, i)] = ()
    return NestComplex(tuple(by_dim), faces)
