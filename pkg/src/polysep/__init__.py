"""Exact face lattices of polytopes and machine checks of their minimum separators."""

__version__ = "0.1.0"

from .exact import (  # noqa: E402
    GeometryError,
    Hyperplane,
    Side,
    affine_rank,
    classify_side,
    hyperplane_through,
    solve_exact,
)
from .graphs import (  # noqa: E402
    PolytopeGraph,
    Separator,
    enumerate_min_separators,
    induced_subgraph,
    is_connected_after_removal,
    local_connectivity,
    vertex_connectivity,
)
from .lattice import (  # noqa: E402
    Face,
    LinkComplex,
    Polytope,
    build_lattice,
    enumerate_facets,
    is_face,
    is_simplicial,
    polytope_graph,
    vertex_link,
)
from .theorems import (  # noqa: E402
    EmptySimplex,
    Verdict,
    check_balinski,
    check_corollary4,
    check_empty_simplex,
    check_lemma1,
    check_separator_affine_independence,
    check_theorem3_links,
    full_verification,
)
from .generators import (  # noqa: E402
    CatalogSpec,
    builtin_catalog,
    make_bipyramid,
    make_cross_polytope,
    make_cube,
    make_cyclic,
    make_prism,
    make_pyramid,
    make_random_sphere,
    make_simplex,
    realize,
)
