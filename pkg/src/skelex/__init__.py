"""Colored regular graphs, their skeletal expansions, and the way back.

The pipeline: a regular (n+1)-valent graph whose edges carry independent
GF(2)^(n+1) colors at every vertex grows a cell complex (one k-cell per
k-nest); when the expansion closes up, the result is a closed n-manifold,
classified exactly for surfaces and by mod-2 homology for 3-manifolds.
Conversely, any combinatorial manifold's face poset dualizes back to such
a colored graph.
"""

from .classify import (
    HomologyReport,
    SurfaceReport,
    classify_surface,
    homology_mod2,
    manifold_local_check,
)
from .duality import (
    FacePoset,
    dual_colored_graph,
    flags,
    parse_poset,
    predicted_complex,
    sphere_poset,
)
from .errors import (
    CensusLimit,
    DimensionMismatch,
    ExpansionRefused,
    FormatError,
    InvalidGraph,
    InvalidModulus,
    NotCombinatorialManifold,
    NotGoodColoring,
    SkelexError,
    UnsupportedDimension,
)
from .expansion import (
    CellComplex,
    ExpansionOutcome,
    boundary_sphere_complex,
    criterion_3d,
    expand2,
    full_expand,
    sphere_check,
)
from .generators import (
    gen_cube,
    gen_nonorientable_surface,
    gen_orientable_surface,
)
from .gf2 import (
    ColorVector,
    Subspace,
    congruent_mod,
    contains,
    intersect,
    rank_gf2,
    span,
)
from .graph import (
    ColoredGraph,
    Connection,
    check_good,
    color_isomorphic,
    connected_sum,
    connection,
    is_good,
    is_pure,
    parse,
    serialize,
    validate,
)
from .nests import (
    Nest,
    NestComplex,
    enumerate_nests,
    grow_nest,
    nest_complex,
    nest_counts,
    nest_label,
    regularity_check,
)
from .realize import (
    IsotropyRecord,
    fixed_circle_check,
    isotropy_report,
    realizability_summary,
)

__all__ = [
    "CellComplex",
    "CensusLimit",
    "ColorVector",
    "ColoredGraph",
    "Connection",
    "DimensionMismatch",
    "ExpansionOutcome",
    "ExpansionRefused",
    "FacePoset",
    "FormatError",
    "HomologyReport",
    "InvalidGraph",
    "InvalidModulus",
    "IsotropyRecord",
    "Nest",
    "NestComplex",
    "NotCombinatorialManifold",
    "NotGoodColoring",
    "SkelexError",
    "Subspace",
    "SurfaceReport",
    "UnsupportedDimension",
    "boundary_sphere_complex",
    "check_good",
    "classify_surface",
    "color_isomorphic",
    "congruent_mod",
    "connected_sum",
    "connection",
    "contains",
    "criterion_3d",
    "dual_colored_graph",
    "enumerate_nests",
    "expand2",
    "fixed_circle_check",
    "flags",
    "full_expand",
    "gen_cube",
    "gen_nonorientable_surface",
    "gen_orientable_surface",
    "grow_nest",
    "homology_mod2",
    "intersect",
    "is_good",
    "is_pure",
    "isotropy_report",
    "manifold_local_check",
    "nest_complex",
    "nest_counts",
    "nest_label",
    "parse",
    "parse_poset",
    "predicted_complex",
    "rank_gf2",
    "realizability_summary",
    "regularity_check",
    "serialize",
    "span",
    "sphere_check",
    "sphere_poset",
    "validate",
]
