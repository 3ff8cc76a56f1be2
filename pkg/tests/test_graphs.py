from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysep import graphs
from polysep.graphs import (
    GraphError,
    PolytopeGraph,
    enumerate_min_separators,
    induced_subgraph,
    is_connected_after_removal,
    local_connectivity,
    nonadjacent_pairs,
    verify_independent_paths,
    vertex_connectivity,
)
from polysep.lattice import polytope_graph
from oracles import max_disjoint_paths, min_vertex_cut_size, separating_subsets


def cycle(n):
    return PolytopeGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return PolytopeGraph.from_edges(n, combinations(range(n), 2))


STAR = PolytopeGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_graph_validation():
    with pytest.raises(GraphError, match="self-loop"):
        PolytopeGraph(2, ((0,), ()))
    with pytest.raises(GraphError, match="asymmetric"):
        PolytopeGraph(2, ((1,), ()))
    g = PolytopeGraph(3, ((2, 1, 1), (0,), (0,)))
    assert g.adjacency == ((1, 2), (0,), (0,))


def test_is_connected_after_removal_examples():
    c6 = cycle(6)
    assert is_connected_after_removal(c6, {0, 1})
    assert not is_connected_after_removal(c6, {0, 3})
    assert all(is_connected_after_removal(complete(5), s) for s in combinations(range(5), 3))
    with pytest.raises(GraphError, match="empties"):
        is_connected_after_removal(cycle(3), {0, 1, 2})


def test_local_connectivity_examples(unit_cube):
    g = polytope_graph(unit_cube)
    cert = local_connectivity(g, 0, 7)
    assert cert.count == 3 == max_disjoint_paths(g.adjacency, 0, 7)
    assert verify_independent_paths(g, 0, 7, cert.paths)
    assert local_connectivity(cycle(6), 0, 3).count == 2
    assert local_connectivity(STAR, 1, 2).count == 1
    assert local_connectivity(STAR, 1, 2).paths == ((1, 0, 2),)
    with pytest.raises(GraphError, match="adjacent pair"):
        local_connectivity(cycle(6), 0, 1)


def test_local_connectivity_is_deterministic(cube4):
    g = polytope_graph(cube4)
    first = [local_connectivity(g, y, z) for y, z in nonadjacent_pairs(g)]
    assert first == [local_connectivity(g, y, z) for y, z in nonadjacent_pairs(g)]


def test_vertex_connectivity_examples(unit_cube, octahedron):
    for d in range(1, 6):
        assert vertex_connectivity(complete(d + 1)) == d
    assert vertex_connectivity(polytope_graph(unit_cube)) == 3
    assert vertex_connectivity(polytope_graph(octahedron)) == 4


def test_enumerate_min_separators_examples(unit_cube, bipyramid):
    g = polytope_graph(unit_cube)
    seps = enumerate_min_separators(g, 3)
    assert len(seps) == 8
    assert {s.vertex_set for s in seps} == {g.adjacency[v] for v in range(8)}
    assert [s.vertex_set for s in seps] == separating_subsets(g.adjacency, 3)
    seps = enumerate_min_separators(polytope_graph(bipyramid), 3)
    assert [s.vertex_set for s in seps] == [(0, 1, 2)]
    assert enumerate_min_separators(complete(5), 4) == []


def test_separator_witness_pairs(unit_cube):
    g = polytope_graph(unit_cube)
    for sep in enumerate_min_separators(g, 3):
        y, z = sep.witness_pair
        assert y not in sep.vertex_set and z not in sep.vertex_set
        assert y < z and not g.adjacent(y, z)
        comps = graphs.components(g, sep.vertex_set)
        assert (y, z) == (comps[0][0], comps[1][0])


def test_separator_guard(monkeypatch):
    monkeypatch.setattr(graphs, "SUBSET_GUARD", 10)
    with pytest.raises(GraphError, match="exceeds the enumeration bound"):
        enumerate_min_separators(cycle(8), 3)


def test_induced_subgraph_examples(unit_cube, bipyramid):
    g = polytope_graph(unit_cube)
    assert induced_subgraph(g, range(8)) == g
    facet = unit_cube.facets[0].vertex_set
    h = induced_subgraph(g, facet)
    assert h.labels == facet and len(h.edges) == 4 and all(h.degree(v) == 2 for v in range(4))
    assert induced_subgraph(polytope_graph(bipyramid), [0, 1, 2]).is_complete()
    with pytest.raises(GraphError):
        induced_subgraph(g, [])


def test_labels_survive_nested_induction():
    g = PolytopeGraph.from_labelled_edges([10, 20, 30, 40], [(10, 20), (20, 30), (30, 40)])
    h = induced_subgraph(induced_subgraph(g, [1, 2, 3]), [0, 1])
    assert h.labels == (20, 30) and h.edges == [(0, 1)]


@st.composite
def random_graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return PolytopeGraph.from_edges(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@given(random_graphs())
@settings(max_examples=120, deadline=None)
def test_menger_duality_on_random_graphs(g):
    for y, z in nonadjacent_pairs(g):
        cert = local_connectivity(g, y, z)
        assert cert.count == min_vertex_cut_size(g.adjacency, y, z)
        assert len(cert.paths) == cert.count
        assert verify_independent_paths(g, y, z, cert.paths)


@given(random_graphs())
@settings(max_examples=120, deadline=None)
def test_vertex_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


@given(random_graphs(max_n=8), st.integers(1, 4))
@settings(max_examples=80, deadline=None)
def test_separator_enumeration_is_exhaustive(g, k):
    if k >= g.n:
        return
    found = [s.vertex_set for s in enumerate_min_separators(g, k)]
    assert found == separating_subsets(g.adjacency, k)
    for s in combinations(range(g.n), k):
        if g.n - k >= 2 and s not in found:
            assert is_connected_after_removal(g, s)
        elif s in found:
            assert not is_connected_after_removal(g, s)


def test_verify_independent_paths_rejects_bad_certificates():
    c6 = cycle(6)
    assert not verify_independent_paths(c6, 0, 3, [(0, 1, 2, 3), (0, 1, 2, 3)])
    assert not verify_independent_paths(c6, 0, 3, [(0, 2, 3)])
    assert verify_independent_paths(c6, 0, 3, [(0, 1, 2, 3), (0, 5, 4, 3)])
