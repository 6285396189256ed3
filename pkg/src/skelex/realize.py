"""Discrete shadow of the realization construction.

For each nest the joint kernel of its edge colors is a subgroup of the
acting group whose co-rank equals the nest dimension; the quotient carries
2^dim copies of the nest's cell.  Subgroup bases are reported in the dual
basis t0..tn of the group (x_i(t_j) is 1 exactly when i == j), so kernels
are plain GF(2) null spaces of the color rows.  The quotient space itself
is never built; only its isotropy bookkeeping is.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExpansionRefused
from .expansion import full_expand
from .gf2 import null_space
from .graph import ColoredGraph, connection, require_valid
from .nests import Nest, enumerate_nests


@dataclass(frozen=True)
class IsotropyRecord:
    nest: Nest
    subgroup_basis: tuple[int, ...]  # kernel vectors over the t-basis
    corank: int
    copies: int


def _kernel_of_nest(g: ColoredGraph, nest: Nest) -> tuple[int, ...]:
    rows = [g.color(e).mask for e in nest.edge_ids]
    return null_space(rows, g.width)


def isotropy_report(g: ColoredGraph) -> list[IsotropyRecord]:
    """One record per nest of every dimension, in canonical nest order."""
    require_valid(g)
    records: list[IsotropyRecord] = []
    for k in range(g.n + 1):
        for nest in enumerate_nests(g, k):
            kernel = _kernel_of_nest(g, nest)
            corank = g.width - len(kernel)
            if corank != nest.dim:
                raise AssertionError(
                    f"nest {nest.edge_ids}: kernel co-rank {corank} differs"
                    f" from nest dimension {nest.dim}"
                )
            records.append(IsotropyRecord(nest, kernel, corank, 1 << nest.dim))
    return records


def render_t_vector(mask: int, width: int) -> str:
    terms = [f"t{i}" for i in range(width) if (mask >> i) & 1]
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FixedCircleReport:
    edge: int
    endpoints: tuple[int, int]
    arc_copies: int
    fixed_points: tuple[int, int]
    subgroup_basis: tuple[int, ...]
    ok: bool


def fixed_circle_check(g: ColoredGraph, e: int) -> FixedCircleReport:
    """The invariant circle over an edge: two arc copies closed by two
    fixed points, one per endpoint.  The structure is forced for any valid
    good coloring; the report carries the edge's kernel subgroup."""
    require_valid(g)
    u, v, color = g.edges[e]
    kernel = null_space([color.mask], g.width)
    arc_copies = 2  # = 2^(dim of a 1-nest)
    ok = len(kernel) == g.width - 1 and u != v
    return FixedCircleReport(e, (u, v), arc_copies, (u, v), kernel, ok)


@dataclass(frozen=True)
class RealizabilitySummary:
    n: int
    euler: int
    bounds_directly: bool
    doubling_required: bool
    fixed_point_count: int
    tangent_colors: tuple[tuple[str, ...], ...]
    # per-vertex incident colors; the moment-graph identity says these are
    # exactly the tangent weights at the corresponding fixed point


def realizability_summary(g: ColoredGraph) -> RealizabilitySummary:
    """Expansion-backed realizability report.

    Surfaces bound a 3-manifold exactly when their Euler characteristic is
    even; an odd characteristic invokes the doubling trick.  Every closed
    3-manifold bounds, reported unconditionally.  Expansion failures
    propagate as refusals.
    """
    require_valid(g)
    connection(g)  # goodness is a precondition; raises otherwise
    outcome = full_expand(g)
    if not outcome.completed:
        raise ExpansionRefused(outcome.obstruction.reason)
    chi = outcome.complex.euler()
    if g.n == 2:
        bounds = chi % 2 == 0
    else:
        bounds = True
    tangent = tuple(
        tuple(sorted(str(g.color(e)) for e in g.edges_at(v)))
        for v in range(g.vertex_count)
    )
    return RealizabilitySummary(
        n=g.n,
        euler=chi,
        bounds_directly=bounds,
        doubling_required=not bounds,
        fixed_point_count=g.vertex_count,
        tangent_colors=tangent,
    )
