"""Face lattices of full-dimensional polytopes given by exact vertex lists.

Facets are found by brute force: every affinely independent ``d``-subset of
the input spans a hyperplane, which is kept when all points lie weakly on
one side of it.  That costs ``O(C(n, d) * n)`` exact dot products, which is
fine for the desk-scale polytopes this package targets (``n <= 32``,
``d <= 5``); larger inputs are refused up front.  All other faces are
intersections of facets.
"""

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .exact import (
    GeometryError,
    Side,
    affine_rank,
    as_point,
    classify_side,
    hyperplane_through,
)
from .graphs import PolytopeGraph

FACET_SEARCH_GUARD = 10 ** 7


class DegeneratePolytopeError(GeometryError):
    pass


class NonVertexError(GeometryError):
    def __init__(self, index):
        super().__init__("non-vertex input point at index %d" % index)
        self.index = index


@dataclass(frozen=True, order=True)
class Face:
    """A face, identified by the sorted indices of the vertices it contains."""

    dim: int
    vertex_set: tuple

    def __len__(self):
        return len(self.vertex_set)

    def __contains__(self, v):
        return v in self.vertex_set

    def issubset(self, other: "Face") -> bool:
        return set(self.vertex_set) <= set(other.vertex_set)


def _face_dim(points, vertex_set) -> int:
    if not vertex_set:
        return -1
    return affine_rank([points[i] for i in vertex_set])


def _facet_hyperplanes(points, d):
    """Map canonical hyperplane -> sorted tuple of indices ON it."""
    n = len(points)
    if comb(n, d) > FACET_SEARCH_GUARD:
        raise GeometryError("facet search over C(%d, %d) = %d subsets exceeds bound %d"
                            % (n, d, comb(n, d), FACET_SEARCH_GUARD))
    found = {}
    covered = []
    for subset in combinations(range(n), d):
        # a subset lying inside a known facet spans that same facet
        s = set(subset)
        if any(s <= c for c in covered):
            continue
        sub_points = [points[i] for i in subset]
        if affine_rank(sub_points) != d - 1:
            continue
        h = hyperplane_through(sub_points)
        if h in found:
            continue
        sides = [classify_side(h, p) for p in points]
        if Side.POSITIVE in sides and Side.NEGATIVE in sides:
            continue
        on = tuple(i for i, s in enumerate(sides) if s is Side.ON)
        found[h] = on
        covered.append(set(on))
    return found


def _non_vertices(n, facet_sets):
    """Indices whose facets do not pin them down as a single point."""
    bad = []
    for i in range(n):
        containing = [f for f in facet_sets if i in f]
        if not containing:
            bad.append(i)
            continue
        common = set(containing[0]).intersection(*containing[1:])
        if common != {i}:
            bad.append(i)
    return bad


def _hull(points, d, strict):
    """Validated vertex list and facet vertex sets of conv(points)."""
    if len(points) == 0:
        raise GeometryError("empty point set")
    if any(len(p) != d for p in points):
        raise GeometryError("dimension mismatch: points must have %d coordinates" % d)
    dups = [i for i, p in enumerate(points) if points.index(p) != i]
    if dups:
        if strict:
            raise NonVertexError(dups[0])
        warnings.warn("dropping repeated input points %s" % dups)
        points = [p for i, p in enumerate(points) if i not in dups]
    k = affine_rank(points)
    if k < d:
        raise DegeneratePolytopeError(
            "degenerate polytope: affine hull has dimension %d < %d" % (k, d))
    facet_sets = list(_facet_hyperplanes(points, d).values())
    bad = _non_vertices(len(points), facet_sets)
    if bad:
        if strict:
            raise NonVertexError(bad[0])
        warnings.warn("dropping non-vertex input points %s" % bad)
        points = [p for i, p in enumerate(points) if i not in bad]
        facet_sets = list(_facet_hyperplanes(points, d).values())
    return points, sorted(Face(d - 1, fs) for fs in facet_sets)


def enumerate_facets(vertices: Sequence, d: int, strict: bool = True) -> list:
    """All facets of conv(vertices), as :class:`Face` objects sorted by vertex set.

    In strict mode a point that is not a vertex of the hull (including a
    repeated point) raises :class:`NonVertexError`.  With ``strict=False``
    such points are dropped with a warning and facet indices refer to the
    surviving points in their original order.
    """
    return _hull([as_point(p) for p in vertices], d, strict)[1]


def build_lattice(facets: Sequence[Face], points: Sequence) -> frozenset:
    """Proper faces of the polytope: every intersection of facets.

    Includes the empty face (dim -1) and excludes the polytope itself.
    Dimensions are computed from the coordinates in ``points``.
    """
    facet_sets = [frozenset(f.vertex_set) for f in facets]
    faces = set(facet_sets)
    frontier = list(facet_sets)
    while frontier:
        new = []
        for face in frontier:
            for fs in facet_sets:
                meet = face & fs
                if meet not in faces:
                    faces.add(meet)
                    new.append(meet)
        frontier = new
    faces.add(frozenset())
    return frozenset(Face(_face_dim(points, tuple(sorted(f))), tuple(sorted(f)))
                     for f in faces)


@dataclass(frozen=True)
class LinkComplex:
    apex: int
    faces: frozenset
    graph: PolytopeGraph

    @property
    def vertices(self) -> tuple:
        return self.graph.labels


@dataclass(frozen=True)
class Polytope:
    """A full-dimensional polytope with its facets and proper face lattice."""

    ambient_dim: int
    vertices: tuple
    facets: tuple
    lattice: frozenset
    vertex_facet_incidence: tuple
    name: str = ""
    _face_sets: frozenset = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_face_sets",
                           frozenset(f.vertex_set for f in self.lattice))

    @classmethod
    def from_points(cls, points: Iterable, d: Optional[int] = None,
                    name: str = "", strict: bool = True) -> "Polytope":
        pts = [as_point(p) for p in points]
        if d is None:
            if not pts:
                raise GeometryError("empty point set")
            d = len(pts[0])
        pts, facets = _hull(pts, d, strict)
        lattice = build_lattice(facets, pts)
        incidence = tuple(tuple(j for j, f in enumerate(facets) if i in f.vertex_set)
                          for i in range(len(pts)))
        return cls(d, tuple(pts), tuple(facets), lattice, incidence, name)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def d(self) -> int:
        return self.ambient_dim

    def faces_of_dim(self, k: int) -> list:
        return sorted(f for f in self.lattice if f.dim == k)

    def f_vector(self) -> tuple:
        return tuple(len(self.faces_of_dim(k)) for k in range(self.ambient_dim))

    def _check_indices(self, s):
        for v in s:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise IndexError("unknown vertex index %r" % (v,))


def is_face(p: Polytope, s: Iterable[int]) -> bool:
    """Whether the vertex set ``s`` is exactly the vertex set of a face.

    The empty set and the full vertex set (the polytope itself) count as faces.
    """
    s = tuple(sorted(set(s)))
    p._check_indices(s)
    if len(s) == p.n:
        return True
    return s in p._face_sets


def polytope_graph(p: Polytope) -> PolytopeGraph:
    if p.d == 1:
        # the segment is its own (and only) edge; the lattice stores proper faces
        return PolytopeGraph.from_edges(2, [(0, 1)])
    return PolytopeGraph.from_edges(p.n, (f.vertex_set for f in p.faces_of_dim(1)))


def vertex_link(p: Polytope, x: int) -> LinkComplex:
    """Faces not containing ``x`` that lie in some facet containing ``x``."""
    p._check_indices([x])
    star = [set(p.facets[j].vertex_set) for j in p.vertex_facet_incidence[x]]
    faces = frozenset(f for f in p.lattice
                      if x not in f.vertex_set
                      and any(set(f.vertex_set) <= s for s in star))
    verts = [f.vertex_set[0] for f in faces if f.dim == 0]
    edges = [f.vertex_set for f in faces if f.dim == 1]
    return LinkComplex(x, faces, PolytopeGraph.from_labelled_edges(verts, edges))


def is_simplicial(p: Polytope) -> bool:
    return all(len(f.vertex_set) == p.ambient_dim for f in p.facets)
