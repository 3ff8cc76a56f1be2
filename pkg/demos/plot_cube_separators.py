"""
Minimum separators of the 3-cube
================================

The cube graph is 3-connected.  Its 3-separators are exactly the eight
vertex neighbourhoods, and none of them is an empty triangle.
"""

from polysep import make_cube, polytope_graph, vertex_connectivity
from polysep.graphs import enumerate_min_separators
from polysep.theorems import check_empty_simplex, check_theorem3_links

cube = make_cube(3)
g = polytope_graph(cube)
print("f-vector", cube.f_vector(), "kappa", vertex_connectivity(g))

# each separator is N(v) for the vertex v it cuts off
for sep in enumerate_min_separators(g, 3):
    cut_off = [v for v in range(g.n) if g.adjacency[v] == sep.vertex_set]
    links = check_theorem3_links(cube, sep.vertex_set)
    print(sep.vertex_set, "= N(%d)" % cut_off[0],
          "links ok" if links == (True, True) else links,
          check_empty_simplex(cube, sep.vertex_set).value)
