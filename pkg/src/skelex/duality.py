"""From a combinatorial manifold's face poset back to a colored graph.

Chains of cells with strictly increasing dimension ("flags") are the
simplices of the barycentric subdivision.  Full flags (one cell per
dimension 0..n) become the vertices of the dual graph; flags missing
exactly one dimension k become its edges, colored by the basis vector x_k,
joining the two full flags that extend them.  A one-short flag extending to
anything other than two full flags witnesses that the input is not a
closed combinatorial manifold.

Face-poset file format (JSON)::

    {"top_dim": 2, "cells": [["v0", 0, []], ["e01", 1, ["v0", "v1"]], ...]}

Simplicial shortcut::

    {"simplices": [[0, 1, 2], [0, 1, 3], ...]}

Cell ids may be strings or integers; face lists may name any proper faces
(the transitive closure is taken automatically).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import FormatError, NotCombinatorialManifold
from .gf2 import ColorVector
from .graph import ColoredGraph, canonicalize

CellId = int | str


class FacePoset:
    """A regular cell decomposition given by its face relation.

    Cells are stored densely ordered by (dimension, original id); ``faces``
    holds the transitively closed set of proper faces of each cell.
    """

    def __init__(self, dims: dict[CellId, int], faces: dict[CellId, set[CellId]]):
        self.order = sorted(dims, key=lambda c: (dims[c], str(c)))
        self.index = {c: i for i, c in enumerate(self.order)}
        self.dim = [dims[c] for c in self.order]
        self.top_dim = max(self.dim) if self.dim else 0
        closed = _transitive_closure(faces)
        self.faces = [
            frozenset(self.index[f] for f in closed[c]) for c in self.order
        ]
        self._validate()
        self.cofaces: list[set[int]] = [set() for _ in self.order]
        for c, fs in enumerate(self.faces):
            for f in fs:
                self.cofaces[f].add(c)

    def _validate(self) -> None:
        for c, fs in enumerate(self.faces):
            for f in fs:
                if self.dim[f] >= self.dim[c]:
                    raise FormatError(
                        f"cell {self.order[c]!r} (dim {self.dim[c]}) lists"
                        f" {self.order[f]!r} (dim {self.dim[f]}) as a face"
                    )
            if self.dim[c] > 0 and not fs:
                raise FormatError(
                    f"cell {self.order[c]!r} of dim {self.dim[c]} has no faces"
                )
            expected_dims = set(range(self.dim[c]))
            got_dims = {self.dim[f] for f in fs}
            if self.dim[c] > 0 and got_dims != expected_dims:
                raise FormatError(
                    f"cell {self.order[c]!r}: faces cover dims"
                    f" {sorted(got_dims)}, expected {sorted(expected_dims)}"
                )
        top = [c for c in range(len(self.order)) if self.dim[c] == self.top_dim]
        under_top: set[int] = set(top)
        for c in top:
            under_top |= self.faces[c]
        if len(under_top) != len(self.order):
            raise FormatError("poset is not pure: some cell lies under no top cell")

    def cells_of_dim(self, d: int) -> list[int]:
        return [c for c in range(len(self.order)) if self.dim[c] == d]

    def cell_count(self) -> int:
        return len(self.order)

    def euler(self) -> int:
        return sum((-1) ** d for d in self.dim)

    @classmethod
    def from_cells(
        cls, cells: list[tuple[CellId, int, list[CellId]]]
    ) -> "FacePoset":
        dims: dict[CellId, int] = {}
        faces: dict[CellId, set[CellId]] = {}
        for cid, dim, fs in cells:
            if cid in dims:
                raise FormatError(f"duplicate cell id {cid!r}")
            dims[cid] = dim
            faces[cid] = set(fs)
        for cid, fs in faces.items():
            for f in fs:
                if f not in dims:
                    raise FormatError(f"cell {cid!r} lists unknown face {f!r}")
        return cls(dims, faces)

    @classmethod
    def from_simplices(cls, simplices: list[list[int]]) -> "FacePoset":
        """Generate the full poset of a pure simplicial complex."""
        if not simplices:
            raise FormatError("empty simplex list")
        top = {len(s) for s in simplices}
        if len(top) != 1:
            raise FormatError("maximal simplices must all have the same size")
        dims: dict[CellId, int] = {}
        faces: dict[CellId, set[CellId]] = {}

        def key(vs: tuple[int, ...]) -> str:
            return "s" + "_".join(str(v) for v in vs)

        for simplex in simplices:
            vs = tuple(sorted(simplex))
            if len(set(vs)) != len(vs):
                raise FormatError(f"degenerate simplex {simplex}")
            for size in range(1, len(vs) + 1):
                for sub in combinations(vs, size):
                    cid = key(sub)
                    dims[cid] = size - 1
                    proper = {
                        key(s)
                        for ssz in range(1, size)
                        for s in combinations(sub, ssz)
                    }
                    faces[cid] = proper
        return cls(dims, faces)


def _transitive_closure(
    faces: dict[CellId, set[CellId]]
) -> dict[CellId, set[CellId]]:
    closed: dict[CellId, set[CellId]] = {}

    def close(c: CellId, trail: tuple[CellId, ...]) -> set[CellId]:
        if c in closed:
            return closed[c]
        if c in trail:
            raise FormatError(f"face relation has a cycle through {c!r}")
        acc = set(faces.get(c, ()))
        for f in list(acc):
            acc |= close(f, trail + (c,))
        closed[c] = acc
        return acc

    for c in faces:
        close(c, ())
    return closed


Flag = tuple[int, ...]


@dataclass(frozen=True)
class FlagSets:
    full: tuple[Flag, ...]
    one_short: tuple[Flag, ...]


def _chains_of_length(p: FacePoset, length: int) -> list[Flag]:
    """All strictly increasing-by-face chains of exactly ``length`` cells."""
    if length < 1:
        raise ValueError("chain length must be >= 1")
    chains: list[Flag] = [(c,) for c in range(p.cell_count())]
    for _ in range(length - 1):
        chains = [
            chain + (c,)
            for chain in chains
            for c in sorted(p.cofaces[chain[-1]])
        ]
    return sorted(chains)


def flags(p: FacePoset) -> FlagSets:
    """Full flags (dual-graph vertices) and one-short flags (its edges)."""
    n = p.top_dim
    return FlagSets(
        tuple(_chains_of_length(p, n + 1)),
        tuple(_chains_of_length(p, n)) if n >= 1 else (),
    )


def _missing_dim(p: FacePoset, chain: Flag) -> int:
    present = {p.dim[c] for c in chain}
    missing = set(range(p.top_dim + 1)) - present
    assert len(missing) == 1, f"chain {chain} misses dims {missing}"
    return missing.pop()


def _extensions(p: FacePoset, chain: Flag, k: int) -> list[Flag]:
    """Full flags obtained by inserting a dim-k cell into the chain."""
    below = None
    above = None
    for c in chain:
        if p.dim[c] == k - 1:
            below = c
        if p.dim[c] == k + 1:
            above = c
    candidates = []
    for c in p.cells_of_dim(k):
        if below is not None and below not in p.faces[c]:
            continue
        if above is not None and c not in p.faces[above]:
            continue
        candidates.append(c)
    position = sum(1 for c in chain if p.dim[c] < k)
    return [chain[:position] + (c,) + chain[position:] for c in candidates]


def _describe_flag(p: FacePoset, chain: Flag) -> str:
    return "[" + " < ".join(repr(p.order[c]) for c in chain) + "]"


def _check_vertex_links_2d(p: FacePoset) -> None:
    """For surface posets: the cells around each vertex must form one circle."""
    for v in p.cells_of_dim(0):
        local_edges = [e for e in p.cells_of_dim(1) if v in p.faces[e]]
        arcs: dict[int, list[int]] = {e: [] for e in local_edges}
        for f in p.cells_of_dim(2):
            if v not in p.faces[f]:
                continue
            through = [e for e in local_edges if e in p.faces[f]]
            if len(through) != 2:
                raise NotCombinatorialManifold(
                    f"2-cell {p.order[f]!r} meets vertex {p.order[v]!r}"
                    f" through {len(through)} edges"
                )
            a, b = through
            arcs[a].append(b)
            arcs[b].append(a)
        if not local_edges:
            raise NotCombinatorialManifold(
                f"vertex {p.order[v]!r} has no incident edges"
            )
        if any(len(nbrs) != 2 for nbrs in arcs.values()):
            raise NotCombinatorialManifold(
                f"link of vertex {p.order[v]!r} is not 2-regular"
            )
        seen = {local_edges[0]}
        stack = [local_edges[0]]
        while stack:
            e = stack.pop()
            for f in arcs[e]:
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        if len(seen) != len(local_edges):
            raise NotCombinatorialManifold(
                f"link of vertex {p.order[v]!r} is disconnected"
            )


def dual_colored_graph(p: FacePoset) -> ColoredGraph:
    """The dual graph: full flags as vertices, one-short flags as edges.

    Each one-short flag missing dimension k must extend to exactly two full
    flags; the edge joining them is colored x_k.  The result is a valid,
    connected, pure (n+1)-valent graph.
    """
    n = p.top_dim
    if n < 1:
        raise NotCombinatorialManifold("top dimension must be >= 1")
    if n == 2:
        _check_vertex_links_2d(p)
    fl = flags(p)
    vertex_index = {flag: i for i, flag in enumerate(fl.full)}
    edges = []
    for chain in fl.one_short:
        k = _missing_dim(p, chain)
        extensions = _extensions(p, chain, k)
        if len(extensions) != 2:
            raise NotCombinatorialManifold(
                f"flag {_describe_flag(p, chain)} (missing dim {k}) extends to"
                f" {len(extensions)} full flags, expected 2"
            )
        a, b = (vertex_index[f] for f in extensions)
        edges.append((a, b, ColorVector.unit(k, n + 1)))
    return canonicalize(ColoredGraph(n, len(fl.full), tuple(edges)))


def predicted_complex(p: FacePoset) -> tuple[int, ...]:
    """Expected nest census of the dual graph, by flag counting.

    The m-cells of the dual decomposition correspond to chains of
    n - m + 1 cells, so the returned tuple (nu_0, ..., nu_n) must equal the
    nest counts of ``dual_colored_graph(p)`` when the input is a closed
    combinatorial manifold.
    """
    n = p.top_dim
    return tuple(len(_chains_of_length(p, n - m + 1)) for m in range(n + 1))


def sphere_poset(n: int) -> FacePoset:
    """The minimal sphere decomposition: two cells in every dimension 0..n.

    Every cell of dimension i is a face of every cell of dimension j > i;
    its dual graph is the axis-colored (n+1)-cube 1-skeleton.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    dims: dict[CellId, int] = {}
    faces: dict[CellId, set[CellId]] = {}
    for d in range(n + 1):
        for side in (1, 2):
            cid = f"c{d}_{side}"
            dims[cid] = d
            faces[cid] = {
                f"c{dd}_{ss}" for dd in range(d) for ss in (1, 2)
            }
    return FacePoset(dims, faces)


def parse_poset(text: str) -> FacePoset:
    """Parse either the explicit poset format or the simplicial shortcut."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    if "simplices" in data:
        simplices = data["simplices"]
        if not isinstance(simplices, list) or not all(
            isinstance(s, list) and all(isinstance(v, int) for v in s)
            for s in simplices
        ):
            raise FormatError("'simplices' must be an array of integer arrays")
        return FacePoset.from_simplices(simplices)
    if "cells" not in data or "top_dim" not in data:
        raise FormatError("expected fields 'top_dim' and 'cells' (or 'simplices')")
    cells = []
    for i, item in enumerate(data["cells"]):
        if not (isinstance(item, list) and len(item) == 3):
            raise FormatError(f"cells[{i}]: expected [id, dim, [face ids]]")
        cid, dim, fs = item
        if not isinstance(dim, int) or not isinstance(fs, list):
            raise FormatError(f"cells[{i}]: expected [id, int, list]")
        cells.append((cid, dim, fs))
    poset = FacePoset.from_cells(cells)
    if poset.top_dim != data["top_dim"]:
        raise FormatError(
            f"stated top_dim {data['top_dim']} but cells reach {poset.top_dim}"
        )
    return poset
