"""Skeletal expansion: attach one k-cell per k-nest, inductively.

The 2-skeleton always exists for good colorings (2-nests are embedded
circles).  For n = 3 the counting criterion nu_3 = nu_2 - nu_0 decides
whether the expansion closes up; each candidate 3-cell's boundary
subcomplex is verified to be a 2-sphere before attaching.  Sphere
recognition stops at dimension 2, so graphs with n >= 4 expand only to
their 2-skeleton.

Cells keep a reference to their defining nest; the dimension- and
face-preserving correspondence between cells and nests is this link.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotGoodColoring, UnsupportedDimension
from .graph import ColoredGraph, require_valid
from .nests import Nest, enumerate_nests, nest_label


@dataclass(frozen=True)
class Cell:
    dim: int
    index: int
    nest: Nest
    faces: tuple[int, ...]  # indices of (dim-1)-cells in this cell's boundary


class CellComplex:
    """A regular cell complex with GF(2) boundary data.

    Mod-2 incidence between a k-cell and a (k-1)-cell is 1 exactly when the
    latter is a face of the former (the regular-complex rule), so boundary
    matrices are read straight off the face lists.
    """

    def __init__(self, graph: ColoredGraph, cells_by_dim: list[list[Cell]]):
        self.graph = graph
        self.cells_by_dim = cells_by_dim

    @property
    def top_dim(self) -> int:
        return len(self.cells_by_dim) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(cells) for cells in self.cells_by_dim)

    def euler(self) -> int:
        return sum((-1) ** k * len(cells) for k, cells in enumerate(self.cells_by_dim))

    def boundary_matrix(self, k: int) -> list[list[int]]:
        """The matrix of the boundary map from k-cells to (k-1)-cells.

        Rows are (k-1)-cells, columns k-cells, entries in {0, 1}.
        """
        if not 1 <= k <= self.top_dim:
            raise ValueError(f"boundary matrix index {k} outside 1..{self.top_dim}")
        rows = len(self.cells_by_dim[k - 1])
        matrix = [[0] * len(self.cells_by_dim[k]) for _ in range(rows)]
        for cell in self.cells_by_dim[k]:
            for f in cell.faces:
                matrix[f][cell.index] = 1
        return matrix

    def boundary_condition_holds(self) -> bool:
        """Does the composite of consecutive boundary maps vanish mod 2?"""
        for k in range(2, self.top_dim + 1):
            lower = self.cells_by_dim[k - 1]
            for cell in self.cells_by_dim[k]:
                acc: set[int] = set()
                for f in cell.faces:
                    acc ^= set(lower[f].faces)
                if acc:
                    return False
        return True

    def cofaces(self, k: int) -> list[list[int]]:
        """For each k-cell, the (k+1)-cells having it as a face."""
        out: list[list[int]] = [[] for _ in self.cells_by_dim[k]]
        if k + 1 <= self.top_dim:
            for cell in self.cells_by_dim[k + 1]:
                for f in cell.faces:
                    out[f].append(cell.index)
        return out


def _faces_of(nest: Nest, lower: list[Cell]) -> tuple[int, ...]:
    return tuple(c.index for c in lower if nest.contains(c.nest))


def expand2(g: ColoredGraph) -> CellComplex:
    """The 2-skeleton: vertices, edges, and one disc per 2-nest circle.

    Every 2-nest must be an embedded circle (connected, regular 2-valent);
    a violation witnesses a non-good coloring and is refused.
    """
    require_valid(g)
    if g.n < 2:
        raise UnsupportedDimension(f"2-skeletal expansion needs n >= 2, got n={g.n}")
    zero_cells = [
        Cell(0, i, nest, ())
        for i, nest in enumerate(enumerate_nests(g, 0))
    ]
    one_cells = [
        Cell(1, i, nest, tuple(nest.vertex_ids))
        for i, nest in enumerate(enumerate_nests(g, 1))
    ]
    two_cells: list[Cell] = []
    for i, nest in enumerate(enumerate_nests(g, 2)):
        edge_set = set(nest.edge_ids)
        for v in nest.vertex_ids:
            valence = sum(1 for e in g.edges_at(v) if e in edge_set)
            if valence != 2:
                raise NotGoodColoring(
                    f"2-nest {nest.edge_ids} is not a circle: vertex {v} has"
                    f" valence {valence}; the coloring is not good"
                )
        two_cells.append(Cell(2, i, nest, tuple(sorted(edge_set))))
    return CellComplex(g, [zero_cells, one_cells, two_cells])


def _subcomplex(complex: CellComplex, keep: list[set[int]]) -> CellComplex:
    """The subcomplex on the selected cell indices, reindexed per dimension."""
    top = max((k for k, s in enumerate(keep) if s), default=0)
    remap: list[dict[int, int]] = []
    new_cells: list[list[Cell]] = []
    for k in range(top + 1):
        indices = sorted(keep[k]) if k < len(keep) else []
        remap.append({old: new for new, old in enumerate(indices)})
        cells = []
        for new, old in enumerate(indices):
            cell = complex.cells_by_dim[k][old]
            faces = tuple(remap[k - 1][f] for f in cell.faces) if k else ()
            cells.append(Cell(k, new, cell.nest, faces))
        new_cells.append(cells)
    return CellComplex(complex.graph, new_cells)


def boundary_sphere_complex(
    g: ColoredGraph, complex: CellComplex, nest: Nest
) -> CellComplex:
    """The union of all cells whose nest is a subgraph of the given nest.

    ``complex`` must be the (k)-skeleton and ``nest`` a (k+1)-nest; the
    result is the candidate boundary sphere for the cell the nest defines.
    """
    if nest.dim != complex.top_dim + 1:
        raise ValueError(
            f"nest dimension {nest.dim} does not extend a"
            f" {complex.top_dim}-skeleton"
        )
    keep = [
        {c.index for c in cells if nest.contains(c.nest)}
        for cells in complex.cells_by_dim
    ]
    return _subcomplex(complex, keep)


@dataclass(frozen=True)
class SphereCheck:
    ok: bool
    reason: str


def _is_connected_complex(F: CellComplex) -> bool:
    vertices = F.cells_by_dim[0]
    if not vertices:
        return False
    adjacency: dict[int, set[int]] = {c.index: set() for c in vertices}
    for edge in F.cells_by_dim[1] if F.top_dim >= 1 else []:
        a, b = edge.faces
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {vertices[0].index}
    stack = [vertices[0].index]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def sphere_check(F: CellComplex, k: int) -> SphereCheck:
    """Recognize circles (k=1) and 2-spheres (k=2); nothing higher.

    k=1: connected with every vertex in exactly two edges.  k=2: a closed
    surface (every edge in exactly two discs, every vertex link a circle)
    whose Euler characteristic is 2; by surface classification that pins
    the 2-sphere.
    """
    if k not in (1, 2):
        raise UnsupportedDimension(
            f"sphere recognition supports k in {{1, 2}}, got {k}"
        )
    if F.top_dim < k:
        return SphereCheck(False, f"complex has no {k}-cells")
    if not _is_connected_complex(F):
        return SphereCheck(False, "not connected")
    if k == 1:
        valence = [0] * len(F.cells_by_dim[0])
        for edge in F.cells_by_dim[1]:
            for v in edge.faces:
                valence[v] += 1
        bad = [i for i, d in enumerate(valence) if d != 2]
        if bad:
            return SphereCheck(False, f"vertex {bad[0]} lies in {valence[bad[0]]} edges")
        return SphereCheck(True, "circle")

    coface_counts = [0] * len(F.cells_by_dim[1])
    for disc in F.cells_by_dim[2]:
        for f in disc.faces:
            coface_counts[f] += 1
    bad_edges = [i for i, d in enumerate(coface_counts) if d != 2]
    if bad_edges:
        i = bad_edges[0]
        return SphereCheck(False, f"edge {i} lies in {coface_counts[i]} discs")
    link_bad = _vertex_link_failures(F)
    if link_bad is not None:
        return SphereCheck(False, link_bad)
    chi = F.euler()
    if chi != 2:
        return SphereCheck(False, f"closed surface with euler characteristic {chi}")
    # cross-check: a closed connected surface with this characteristic must
    # pass the orientation pass; classify_surface asserts fatally otherwise
    from .classify import classify_surface

    classify_surface(F)
    return SphereCheck(True, "2-sphere")


def _vertex_link_failures(F: CellComplex) -> str | None:
    """Check each vertex link is a single circle; return a diagnosis or None.

    The link graph at v has a node per edge at v and an arc per disc at v
    joining the two boundary edges of that disc through v.
    """
    edges_at_vertex: dict[int, list[int]] = {c.index: [] for c in F.cells_by_dim[0]}
    for edge in F.cells_by_dim[1]:
        for v in edge.faces:
            edges_at_vertex[v].append(edge.index)
    for vcell in F.cells_by_dim[0]:
        v = vcell.nest.vertex_ids[0]
        local_edges = edges_at_vertex[vcell.index]
        arcs: dict[int, list[int]] = {e: [] for e in local_edges}
        for disc in F.cells_by_dim[2]:
            if v not in disc.nest.vertex_ids:
                continue
            through = [
                e for e in disc.faces
                if v in F.cells_by_dim[1][e].nest.vertex_ids
            ]
            if len(through) != 2:
                return (
                    f"disc {disc.index} passes vertex {v} through"
                    f" {len(through)} edges"
                )
            a, b = through
            arcs[a].append(b)
            arcs[b].append(a)
        # the link must be one closed cycle through all local edges
        if not local_edges:
            return f"vertex {v} has no incident edges in the subcomplex"
        degs = {e: len(arcs[e]) for e in local_edges}
        if any(d != 2 for d in degs.values()):
            e = next(e for e, d in degs.items() if d != 2)
            return f"link of vertex {v} is not 2-regular at edge {e}"
        seen = {local_edges[0]}
        stack = [local_edges[0]]
        while stack:
            e = stack.pop()
            for f in arcs[e]:
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        if len(seen) != len(local_edges):
            return f"link of vertex {v} is disconnected"
    return None


@dataclass(frozen=True)
class Criterion3:
    holds: bool
    vertex_count: int
    two_nests: int
    three_nests: int

    def counts(self) -> tuple[int, int, int]:
        return (self.vertex_count, self.two_nests, self.three_nests)


def criterion_3d(g: ColoredGraph) -> Criterion3:
    """The n=3 closing condition: #3-nests == #2-nests - #vertices."""
    if g.n != 3:
        raise UnsupportedDimension(f"criterion applies to n=3 only, got n={g.n}")
    require_valid(g)
    v0 = g.vertex_count
    v2 = len(enumerate_nests(g, 2))
    v3 = len(_three_nests(g))
    return Criterion3(v3 == v2 - v0, v0, v2, v3)


def _three_nests(g: ColoredGraph) -> list[Nest]:
    return enumerate_nests(g, 3)


@dataclass(frozen=True)
class Obstruction:
    nest: Nest | None
    reason: str
    counts: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class ExpansionOutcome:
    complex: CellComplex
    reached_dim: int
    obstruction: Obstruction | None

    @property
    def completed(self) -> bool:
        return self.obstruction is None


def full_expand(g: ColoredGraph) -> ExpansionOutcome:
    """Run the expansion as far as it goes and report how far that was.

    n=2 always completes into a closed surface.  n=3 completes exactly when
    the counting criterion holds; the criterion is checked first (cheap),
    then every candidate boundary is verified to be a 2-sphere.  n >= 4
    stops after the 2-skeleton with an explicit unsupported marker.
    """
    require_valid(g)
    if g.n < 2:
        raise UnsupportedDimension(f"expansion needs n >= 2, got n={g.n}")
    skeleton = expand2(g)
    if g.n == 2:
        return ExpansionOutcome(skeleton, 2, None)
    if g.n >= 4:
        return ExpansionOutcome(
            skeleton,
            2,
            Obstruction(
                None,
                f"sphere recognition above dimension 2 is unsupported (n={g.n})",
            ),
        )

    crit = criterion_3d(g)
    if not crit.holds:
        return ExpansionOutcome(
            skeleton,
            2,
            Obstruction(
                None,
                f"counting criterion fails: {crit.three_nests} 3-nests !="
                f" {crit.two_nests} 2-nests - {crit.vertex_count} vertices",
                crit.counts(),
            ),
        )
    three_cells: list[Cell] = []
    two_cells = skeleton.cells_by_dim[2]
    for i, nest in enumerate(_three_nests(g)):
        boundary = boundary_sphere_complex(g, skeleton, nest)
        verdict = sphere_check(boundary, 2)
        if not verdict.ok:
            return ExpansionOutcome(
                skeleton,
                2,
                Obstruction(
                    nest,
                    f"boundary of 3-nest {nest_label(nest)} is not a 2-sphere:"
                    f" {verdict.reason}",
                ),
            )
        three_cells.append(Cell(3, i, nest, _faces_of(nest, two_cells)))
    full = CellComplex(g, skeleton.cells_by_dim + [three_cells])
    return ExpansionOutcome(full, 3, None)
