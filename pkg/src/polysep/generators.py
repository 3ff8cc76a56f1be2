"""Constructors for the catalog of test polytopes (exact coordinates only)."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import sqrt
from typing import Optional, Union

from .exact import GeometryError, as_point
from .lattice import NonVertexError, Polytope, is_simplicial

FAMILIES = ("simplex", "cube", "cross_polytope", "cyclic", "pyramid", "bipyramid",
            "prism", "random_sphere")
log = logging.getLogger(__name__)

SPHERE_DENOMINATOR = 2 ** 16
MAX_REJECTIONS = 100


class Lcg64:
    """64-bit linear congruential generator.

    ``state <- state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``;
    each draw returns the top 53 bits of the new state scaled to ``[0, 1)``.
    The stream depends only on the seed, so it reproduces on any platform.
    """

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = 2 ** 64 - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(2 ** 53)


def make_simplex(d: int) -> Polytope:
    if d < 1:
        raise GeometryError("simplex needs d >= 1")
    pts = [(0,) * d] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return Polytope.from_points(pts, d, name="simplex(%d)" % d)


def make_cube(d: int) -> Polytope:
    if not 1 <= d <= 5:
        raise GeometryError("cube dimension must be in 1..5, got %d" % d)
    return Polytope.from_points(list(product((-1, 1), repeat=d)), d, name="cube(%d)" % d)


def make_cross_polytope(d: int) -> Polytope:
    if d < 2:
        raise GeometryError("cross-polytope needs d >= 2")
    pts = []
    for i in range(d):
        for sign in (1, -1):
            pts.append(tuple(sign * int(i == j) for j in range(d)))
    return Polytope.from_points(pts, d, name="cross_polytope(%d)" % d)


def make_cyclic(d: int, n: int) -> Polytope:
    """Points ``(t, t^2, ..., t^d)`` for ``t = 1..n`` on the moment curve."""
    if d < 2 or n < d + 1:
        raise GeometryError("cyclic polytope needs d >= 2 and n >= d+1")
    pts = [tuple(t ** k for k in range(1, d + 1)) for t in range(1, n + 1)]
    return Polytope.from_points(pts, d, name="cyclic(%d,%d)" % (d, n))


def _base_points(base) -> list:
    if isinstance(base, Polytope):
        return list(base.vertices)
    pts = [as_point(p) for p in base]
    # validates full-dimensionality and convex position of the base
    return list(Polytope.from_points(pts).vertices)


def _centroid(pts):
    return tuple(sum(c) / len(pts) for c in zip(*pts))


def make_pyramid(base) -> Polytope:
    pts = _base_points(base)
    apex = _centroid(pts) + (Fraction(1),)
    return Polytope.from_points([p + (Fraction(0),) for p in pts] + [apex],
                                name="pyramid(%s)" % _name(base))


def make_bipyramid(base) -> Polytope:
    pts = _base_points(base)
    c = _centroid(pts)
    return Polytope.from_points([p + (Fraction(0),) for p in pts]
                                + [c + (Fraction(1),), c + (Fraction(-1),)],
                                name="bipyramid(%s)" % _name(base))


def make_prism(base) -> Polytope:
    pts = _base_points(base)
    return Polytope.from_points([p + (Fraction(0),) for p in pts]
                                + [p + (Fraction(1),) for p in pts],
                                name="prism(%s)" % _name(base))


def _name(base):
    return base.name if isinstance(base, Polytope) and base.name else "points"


def _sphere_point(rng: Lcg64, d: int) -> tuple:
    # rejection from the cube keeps to +, *, /, sqrt (correctly rounded IEEE ops)
    while True:
        v = [2.0 * rng.random() - 1.0 for _ in range(d)]
        r2 = sum(x * x for x in v)
        if 1e-4 < r2 <= 1.0:
            break
    r = sqrt(r2)
    return tuple(Fraction(round(x / r * SPHERE_DENOMINATOR), SPHERE_DENOMINATOR) for x in v)


def make_random_sphere(d: int, n: int, seed: int) -> Polytope:
    """``n`` seeded points near the unit sphere, rounded to multiples of 2^-16.

    A draw is rejected and redrawn when the rounded points are not in convex
    position or do not span R^d.
    """
    if n < d + 1:
        raise GeometryError("random_sphere needs n >= d+1")
    rng = Lcg64(seed)
    for _ in range(MAX_REJECTIONS):
        pts = [_sphere_point(rng, d) for _ in range(n)]
        try:
            p = Polytope.from_points(pts, d, name="random_sphere(%d,%d,%d)" % (d, n, seed))
        except (NonVertexError, GeometryError):
            continue
        log.info("%s: simplicial=%s", p.name, is_simplicial(p))
        return p
    raise GeometryError("could not realize polytope")


@dataclass(frozen=True)
class CatalogSpec:
    family: str
    d: int = 0
    n: int = 0
    seed: int = 0
    base: Optional["CatalogSpec"] = None
    name: str = ""

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % self.family)
        if self.family in ("pyramid", "bipyramid", "prism"):
            if self.base is None:
                raise ValueError("%s needs a base" % self.family)
            if self.depth() > 3:
                raise ValueError("catalog nesting deeper than 3")
        elif self.d < 1:
            raise ValueError("d must be >= 1")
        if self.family == "cyclic" and self.n < self.d + 1:
            raise ValueError("cyclic needs n >= d+1")

    def depth(self) -> int:
        return 0 if self.base is None else 1 + self.base.depth()

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if self.base is not None:
            return "%s(%s)" % (self.family, self.base.label)
        if self.family == "cyclic":
            return "cyclic(%d,%d)" % (self.d, self.n)
        if self.family == "random_sphere":
            return "random_sphere(%d,%d,%d)" % (self.d, self.n, self.seed)
        return "%s(%d)" % (self.family, self.d)

    def to_dict(self) -> dict:
        out = {"family": self.family}
        if self.base is not None:
            out["base"] = self.base.to_dict()
        else:
            out["d"] = self.d
        if self.family in ("cyclic", "random_sphere"):
            out["n"] = self.n
        if self.family == "random_sphere":
            out["seed"] = self.seed
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogSpec":
        base = data.get("base")
        if isinstance(base, str):
            base = NAMED_BASES[base]
        elif isinstance(base, dict):
            base = cls.from_dict(base)
        return cls(family=data["family"], d=int(data.get("d", 0)), n=int(data.get("n", 0)),
                   seed=int(data.get("seed", 0)), base=base, name=data.get("name", ""))


def realize(spec: Union[CatalogSpec, dict]) -> Polytope:
    if isinstance(spec, dict):
        spec = CatalogSpec.from_dict(spec)
    f = spec.family
    if f == "simplex":
        p = make_simplex(spec.d)
    elif f == "cube":
        p = make_cube(spec.d)
    elif f == "cross_polytope":
        p = make_cross_polytope(spec.d)
    elif f == "cyclic":
        p = make_cyclic(spec.d, spec.n)
    elif f == "random_sphere":
        p = make_random_sphere(spec.d, spec.n, spec.seed)
    else:
        maker = {"pyramid": make_pyramid, "bipyramid": make_bipyramid, "prism": make_prism}[f]
        p = maker(realize(spec.base))
    if spec.name:
        p = Polytope(p.ambient_dim, p.vertices, p.facets, p.lattice,
                     p.vertex_facet_incidence, spec.name)
    return p


NAMED_BASES = {
    "triangle": CatalogSpec("simplex", d=2),
    "square": CatalogSpec("cube", d=2),
    "pentagon": CatalogSpec("cyclic", d=2, n=5),
}


def builtin_catalog() -> list:
    """The default verification catalog."""
    specs = [CatalogSpec("simplex", d=d) for d in range(1, 6)]
    specs += [CatalogSpec("cube", d=d) for d in range(1, 5)]
    specs += [CatalogSpec("cross_polytope", d=d) for d in range(2, 5)]
    specs += [CatalogSpec("cyclic", d=3, n=n) for n in range(4, 9)]
    specs += [CatalogSpec("cyclic", d=4, n=n) for n in range(5, 9)]
    specs += [
        CatalogSpec("pyramid", base=NAMED_BASES["square"], name="square_pyramid"),
        CatalogSpec("bipyramid", base=NAMED_BASES["triangle"], name="triangular_bipyramid"),
        CatalogSpec("prism", base=NAMED_BASES["triangle"], name="triangular_prism"),
    ]
    for i in range(20):
        d = 2 + i % 3
        specs.append(CatalogSpec("random_sphere", d=d, n=min(12, d + 3 + i // 3), seed=i))
    return specs
