"""Identify the manifold an expansion produced.

Surfaces are classified exactly: orientability is decided by searching a
disc-orientation assignment in which the two traversals of every shared
edge disagree (a parity constraint system solved by union-find), and the
genus falls out of the Euler characteristic.  For 3-complexes only mod-2
homology is computed; homology alone cannot name a 3-manifold and the
report says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import SkelexError
from .expansion import CellComplex
from .gf2 import rank_gf2
from .graph import ColoredGraph
from .nests import Nest


@dataclass(frozen=True)
class SurfaceReport:
    orientable: bool
    euler: int
    genus: int
    name: str


@dataclass(frozen=True)
class HomologyReport:
    betti_mod2: tuple[int, ...]
    euler: int
    note: str = ""


def _circle_traversal(graph: ColoredGraph, nest: Nest) -> list[tuple[int, bool]]:
    """Walk the circle nest once; True means the edge is crossed u -> v.

    The nest must be an embedded circle (each of its vertices meets exactly
    two of its edges); double edges between two vertices are handled by
    tracking edge ids rather than endpoints.
    """
    by_vertex: dict[int, list[int]] = {v: [] for v in nest.vertex_ids}
    for e in nest.edge_ids:
        for v in graph.ends(e):
            by_vertex[v].append(e)
    start_vertex = nest.vertex_ids[0]
    first = min(by_vertex[start_vertex])
    walk: list[tuple[int, bool]] = []
    vertex, edge = start_vertex, first
    while True:
        u, v = graph.ends(edge)
        forward = vertex == u
        walk.append((edge, forward))
        vertex = v if forward else u
        nxt = [e for e in by_vertex[vertex] if e != edge]
        if len(nxt) != 1:
            raise SkelexError(
                f"nest {nest.edge_ids} is not an embedded circle at vertex {vertex}"
            )
        edge = nxt[0]
        if vertex == start_vertex and edge == first:
            break
    if len(walk) != len(nest.edge_ids):
        raise SkelexError(f"nest {nest.edge_ids} walk missed edges")
    return walk


class _ParityUnionFind:
    """Union-find where each node carries a parity relative to its root."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size

    def find(self, x: int) -> tuple[int, int]:
        if self.parent[x] == x:
            return x, 0
        root, p = self.find(self.parent[x])
        self.parent[x] = root
        self.parity[x] ^= p
        return root, self.parity[x]

    def union(self, a: int, b: int, relation: int) -> bool:
        """Impose parity(a) xor parity(b) == relation; False on conflict."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == relation
        self.parent[ra] = rb
        self.parity[ra] = pa ^ pb ^ relation
        return True


def classify_surface(c: CellComplex) -> SurfaceReport:
    """Exact classification of a closed surface complex.

    Requires a 2-dimensional complex in which every edge lies in exactly
    two discs.  A connected closed surface with Euler characteristic 2 must
    be orientable; hitting the opposite would be an internal inconsistency
    and is asserted fatally.
    """
    if c.top_dim != 2:
        raise SkelexError(f"surface classification needs a 2-complex, got dim {c.top_dim}")
    coface_counts = [0] * len(c.cells_by_dim[1])
    for disc in c.cells_by_dim[2]:
        for f in disc.faces:
            coface_counts[f] += 1
    bad = [i for i, d in enumerate(coface_counts) if d != 2]
    if bad:
        raise SkelexError(
            f"not a closed surface complex: edge {bad[0]} lies in"
            f" {coface_counts[bad[0]]} discs"
        )

    # orientation parity: two discs sharing an edge must traverse it oppositely
    traversals = [
        dict(_circle_traversal(c.graph, disc.nest)) for disc in c.cells_by_dim[2]
    ]
    edge_users: dict[int, list[int]] = {}
    for disc_index, walk in enumerate(traversals):
        for edge_cell_index in c.cells_by_dim[2][disc_index].faces:
            edge_users.setdefault(edge_cell_index, []).append(disc_index)
    uf = _ParityUnionFind(len(c.cells_by_dim[2]))
    orientable = True
    for edge_cell_index, users in edge_users.items():
        a, b = users
        edge_id = c.cells_by_dim[1][edge_cell_index].nest.edge_ids[0]
        relation = 1 ^ traversals[a][edge_id] ^ traversals[b][edge_id]
        if not uf.union(a, b, relation):
            orientable = False
            break

    chi = c.euler()
    if orientable:
        if (2 - chi) % 2:
            raise SkelexError(f"orientable surface with odd 2-chi: {chi}")
        genus = (2 - chi) // 2
    else:
        genus = 2 - chi
    assert not (chi == 2 and not orientable), (
        "a closed connected surface with euler characteristic 2 failed the"
        " orientation pass; internal inconsistency"
    )
    if genus == 0:
        name = "S2"
    elif orientable:
        name = f"gT2({genus})"
    else:
        name = f"kP2({genus})"
    return SurfaceReport(orientable, chi, genus, name)


def homology_mod2(c: CellComplex) -> HomologyReport:
    """Mod-2 Betti numbers from the ranks of the boundary matrices."""
    if not c.boundary_condition_holds():
        raise SkelexError("boundary condition violated: composite maps not zero")
    top = c.top_dim
    counts = c.counts()
    ranks = [0] * (top + 2)  # ranks[k] = rank of the k-th boundary map
    for k in range(1, top + 1):
        ranks[k] = rank_gf2(c.boundary_matrix(k))
    betti = tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    chi = c.euler()
    alt = sum((-1) ** i * b for i, b in enumerate(betti))
    if alt != chi:
        raise SkelexError(
            f"euler characteristic {chi} disagrees with betti alternating sum {alt}"
        )
    note = ""
    if top == 3:
        note = (
            "mod-2 homology does not determine a 3-manifold up to"
            " homeomorphism; no finer classification is attempted"
        )
    return HomologyReport(betti, chi, note)


@dataclass(frozen=True)
class LocalCheckReport:
    ok: bool
    problems: tuple[str, ...]


def manifold_local_check(c: CellComplex) -> LocalCheckReport:
    """Combinatorial local conditions of a completed expansion.

    Every (top-1)-cell must lie in exactly two top cells, and around every
    vertex the incident cells must pair off with the subsets of its edges:
    one k-cell per k-subset of the n+1 edges at the vertex.
    """
    problems: list[str] = []
    top = c.top_dim
    counts = [0] * len(c.cells_by_dim[top - 1])
    for cell in c.cells_by_dim[top]:
        for f in cell.faces:
            counts[f] += 1
    for i, d in enumerate(counts):
        if d != 2:
            problems.append(
                f"{top - 1}-cell {i} lies in {d} top cells (expected 2)"
            )

    g = c.graph
    for v in range(g.vertex_count):
        star = set(g.edges_at(v))
        for k in range(1, top + 1):
            incident = [
                cell for cell in c.cells_by_dim[k]
                if v in cell.nest.vertex_ids
            ]
            expected = comb(len(star), k)
            if len(incident) != expected:
                problems.append(
                    f"vertex {v}: {len(incident)} incident {k}-cells,"
                    f" expected {expected}"
                )
                continue
            seen_subsets = set()
            for cell in incident:
                subset = frozenset(cell.nest.edge_ids) & frozenset(star)
                if len(subset) != k:
                    problems.append(
                        f"vertex {v}: {k}-cell {cell.index} meets it in"
                        f" {len(subset)} edges"
                    )
                seen_subsets.add(subset)
            if len(seen_subsets) != expected:
                problems.append(
                    f"vertex {v}: edge subsets of {k}-cells not distinct"
                )
    return LocalCheckReport(not problems, tuple(problems))
