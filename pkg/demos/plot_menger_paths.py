"""
Menger certificates
===================

For a nonadjacent pair the max-flow routine returns as many internally
disjoint paths as the smallest vertex cut between them.
"""

from polysep import make_cross_polytope, polytope_graph
from polysep.graphs import local_connectivity, nonadjacent_pairs, verify_independent_paths

g = polytope_graph(make_cross_polytope(3))
for y, z in nonadjacent_pairs(g):
    cert = local_connectivity(g, y, z)
    assert verify_independent_paths(g, y, z, cert.paths)
    print("%d-%d: %d paths %s" % (y, z, cert.count, list(cert.paths)))
