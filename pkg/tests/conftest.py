"""Shared fixtures: graph corpora, the frozen non-good coloring, and the
criterion counterexample."""

from __future__ import annotations

import random

import pytest

from skelex.gf2 import ColorVector, span
from skelex.graph import ColoredGraph
from skelex.generators import gen_cube

CUBE_EDGES = [(u, v) for u, v, _ in gen_cube(2).edges]
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def colored_from_indices(edges, vertex_count, n, coloring) -> ColoredGraph:
    width = n + 1
    return ColoredGraph(
        n,
        vertex_count,
        tuple(
            (u, v, ColorVector.unit(coloring[i], width))
            for i, (u, v) in enumerate(edges)
        ),
    )


def random_proper_coloring(edges, vertex_count, n_colors, rng: random.Random):
    """One uniformly-wandering proper edge coloring via shuffled backtracking."""
    incident = [[] for _ in range(vertex_count)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    assignment = [-1] * len(edges)

    def backtrack(e):
        if e == len(edges):
            return True
        colors = list(range(n_colors))
        rng.shuffle(colors)
        for color in colors:
            u, v = edges[e]
            if any(
                assignment[f] == color
                for w in (u, v)
                for f in incident[w]
                if f != e
            ):
                continue
            assignment[e] = color
            if backtrack(e + 1):
                return True
            assignment[e] = -1
        return False

    if not backtrack(0):
        return None
    return tuple(assignment)


def random_valid_coloring(edges, vertex_count, width, rng: random.Random):
    """A random coloring by nonzero vectors, independent at every vertex."""
    incident = [[] for _ in range(vertex_count)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    assignment: list[ColorVector | None] = [None] * len(edges)
    nonzero = [ColorVector(m, width) for m in range(1, 1 << width)]

    def independent_at(w):
        colors = [assignment[f] for f in incident[w] if assignment[f] is not None]
        return span(colors, width=width).dim == len(colors)

    def backtrack(e):
        if e == len(edges):
            return True
        u, v = edges[e]
        choices = nonzero[:]
        rng.shuffle(choices)
        for c in choices:
            assignment[e] = c
            if independent_at(u) and independent_at(v):
                if backtrack(e + 1):
                    return True
            assignment[e] = None
        return False

    if not backtrack(0):
        return None
    return ColoredGraph(
        width - 1,
        vertex_count,
        tuple((u, v, assignment[i]) for i, (u, v) in enumerate(edges)),
    )


def nongood_cube() -> ColoredGraph:
    """The cube graph with one axis edge recolored to a mixed vector.

    Recoloring the (0, 1) edge from x0 to x0+x2 keeps every vertex star
    independent but breaks the unique-partner condition; frozen here after
    an exhaustive definitional check found the witness.
    """
    base = gen_cube(2)
    edges = []
    for u, v, c in base.edges:
        if (u, v) == (0, 1):
            edges.append((u, v, ColorVector.from_string("101")))
        else:
            edges.append((u, v, c))
    return ColoredGraph(2, 8, tuple(edges))


def criterion_counterexample() -> ColoredGraph:
    """Two projective-plane-colored tetrahedral graphs joined by a matching.

    Each half is the 4-vertex complete graph carrying the non-orientable
    genus-1 coloring shifted into colors {x1, x2, x3}; an x0-colored
    perfect matching ties the halves together.  Nest counts come out as
    (8, 16, 12, 5), so the 3-dimensional closing criterion fails by one.
    """
    half = {
        (0, 1): "0001",
        (0, 2): "0100",
        (0, 3): "0010",
        (1, 2): "0010",
        (1, 3): "0100",
        (2, 3): "0001",
    }
    edges = []
    for (u, v), c in sorted(half.items()):
        edges.append((u, v, ColorVector.from_string(c)))
        edges.append((u + 4, v + 4, ColorVector.from_string(c)))
    for i in range(4):
        edges.append((i, i + 4, ColorVector.from_string("1000")))
    return ColoredGraph(3, 8, tuple(edges))


def torus7_simplices() -> list[list[int]]:
    """The 7-vertex triangulated torus: triangles {i, i+1, i+3} and
    {i, i+2, i+3} mod 7 (14 triangles, 21 edges)."""
    return [[i % 7, (i + 1) % 7, (i + 3) % 7] for i in range(7)] + [
        [i % 7, (i + 2) % 7, (i + 3) % 7] for i in range(7)
    ]


@pytest.fixture(scope="session")
def cube2():
    return gen_cube(2)


@pytest.fixture(scope="session")
def cube3():
    return gen_cube(3)


@pytest.fixture(scope="session")
def nongood():
    return nongood_cube()


@pytest.fixture(scope="session")
def counterexample():
    return criterion_counterexample()
