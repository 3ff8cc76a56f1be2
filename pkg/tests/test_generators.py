from fractions import Fraction

import pytest

from polysep import generators as gen
from polysep.exact import GeometryError
from polysep.generators import (
    CatalogSpec,
    Lcg64,
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
from polysep.graphs import vertex_connectivity
from polysep.lattice import is_simplicial, polytope_graph
from polysep.theorems import EmptySimplex, Verdict, check_empty_simplex, full_verification
from oracles import gale_facet_count


@pytest.mark.parametrize("d", [1, 3, 5])
def test_simplex(d):
    p = make_simplex(d)
    assert p.n == d + 1
    g = polytope_graph(p)
    assert g.is_complete() and vertex_connectivity(g) == d


@pytest.mark.parametrize("d, n, facets", [(2, 4, 4), (3, 8, 6), (4, 16, 8)])
def test_cube(d, n, facets):
    p = make_cube(d)
    assert p.n == n and len(p.facets) == facets == 2 * d
    assert all(abs(c) == 1 for v in p.vertices for c in v)


def test_cube_range():
    with pytest.raises(GeometryError):
        make_cube(6)
    with pytest.raises(GeometryError):
        make_cube(0)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cross_polytope(d):
    p = make_cross_polytope(d)
    assert p.n == 2 * d and len(p.facets) == 2 ** d and is_simplicial(p)


@pytest.mark.parametrize("d, n", [(4, 6), (4, 7), (4, 8), (3, 6), (3, 8), (2, 5)])
def test_cyclic_matches_gale_evenness(d, n):
    p = make_cyclic(d, n)
    assert p.n == n and len(p.facets) == gale_facet_count(d, n)
    assert is_simplicial(p)


def test_cyclic_reference_counts():
    assert gale_facet_count(4, 6) == 9 and gale_facet_count(4, 7) == 14
    assert make_cyclic(2, 5).f_vector() == (5, 5)


def test_pyramid_bipyramid_prism():
    tri = make_simplex(2)
    bp = make_bipyramid(tri)
    assert bp.n == 5 and len(bp.facets) == 6 and is_simplicial(bp)
    sq = make_pyramid(make_cube(2))
    assert sq.n == 5 and len(sq.facets) == 5
    pr = make_prism(tri)
    assert pr.n == 6 and len(pr.facets) == 5
    with pytest.raises(GeometryError):
        make_pyramid([(0, 0), (1, 1), (2, 2)])


def test_random_sphere_examples():
    p = make_random_sphere(3, 8, 7)
    v, e, f = p.f_vector()
    assert v == 8 and v - e + f == 2 and is_simplicial(p)
    p = make_random_sphere(2, 5, 1)
    assert p.f_vector() == (5, 5)
    p = make_random_sphere(4, 10, 3)
    assert p.n == 10 and full_verification(p).overall is Verdict.PASS


def test_random_sphere_coordinates_are_dyadic():
    p = make_random_sphere(3, 6, 2)
    for v in p.vertices:
        assert all(gen.SPHERE_DENOMINATOR % c.denominator == 0 for c in v)
        norm2 = sum(c * c for c in v)
        assert abs(norm2 - 1) < Fraction(1, 1000)


def test_random_sphere_is_deterministic():
    a = make_random_sphere(4, 9, 11)
    b = make_random_sphere(4, 9, 11)
    assert a.vertices == b.vertices
    assert make_random_sphere(4, 9, 12).vertices != a.vertices


def test_random_sphere_gives_up(monkeypatch):
    def refuse(*args, **kwargs):
        raise GeometryError("nope")

    monkeypatch.setattr(gen.Polytope, "from_points", refuse)
    with pytest.raises(GeometryError, match="could not realize polytope"):
        make_random_sphere(3, 6, 0)


def test_lcg_stream():
    # reference: state_k = (a * state_{k-1} + c) mod 2^64 from seed 0
    a, c = 6364136223846793005, 1442695040888963407
    state, expected = 0, []
    for _ in range(3):
        state = (a * state + c) % 2 ** 64
        expected.append(state)
    rng = Lcg64(0)
    assert [rng.next_u64() for _ in range(3)] == expected
    assert 0 <= Lcg64(99).random() < 1


def test_catalog_spec_round_trip_and_validation():
    spec = CatalogSpec("prism", base=CatalogSpec("pyramid", base=CatalogSpec("cube", d=2)))
    assert CatalogSpec.from_dict(spec.to_dict()) == spec
    assert realize(spec.to_dict()).vertices == realize(spec).vertices
    assert CatalogSpec.from_dict({"family": "bipyramid", "base": "triangle"}).base.d == 2
    with pytest.raises(ValueError, match="nesting"):
        CatalogSpec("prism", base=CatalogSpec("prism", base=CatalogSpec(
            "prism", base=CatalogSpec("prism", base=CatalogSpec("simplex", d=1)))))
    with pytest.raises(ValueError):
        CatalogSpec("cyclic", d=4, n=4)
    with pytest.raises(ValueError):
        CatalogSpec("dodecahedron", d=3)


def test_builtin_catalog_shape():
    specs = builtin_catalog()
    assert sum(s.family == "random_sphere" for s in specs) == 20
    assert all(s.d <= 4 and s.n <= 12 for s in specs if s.family == "random_sphere")
    assert len({s.label for s in specs}) == len(specs)


def test_family_facts(catalog_polytopes):
    for name, p in catalog_polytopes:
        g = polytope_graph(p)
        if name.startswith("simplex"):
            assert g.is_complete()
        if name.startswith("cube") and p.d >= 3:
            assert len(p.facets) == 2 * p.d
            from polysep.graphs import enumerate_min_separators
            for sep in enumerate_min_separators(g, p.d):
                assert check_empty_simplex(p, sep.vertex_set) is not EmptySimplex.YES
        if name.startswith("cross_polytope"):
            assert is_simplicial(p) and len(p.facets) == 2 ** p.d
        if p.d == 3:
            v, e, f = p.f_vector()
            assert v - e + f == 2
