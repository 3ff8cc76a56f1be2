"""
Separators of simplicial polytopes
==================================

In a simplicial d-polytope whose graph is only d-connected, every
d-separator spans an empty (d-1)-simplex: all proper subsets are faces,
the set itself is not.  The triangular bipyramid shows the smallest case.
"""

from polysep import make_bipyramid, make_cyclic, make_simplex
from polysep.exact import format_rational
from polysep.theorems import check_corollary4, full_verification

bipyramid = make_bipyramid(make_simplex(2))
res = check_corollary4(bipyramid)
print("bipyramid", res.verdict.value, [s.vertex_set for s in res.separators])
equator = res.separators[0].vertex_set
print("equator", [[format_rational(c) for c in bipyramid.vertices[i]] for i in equator])

# neighbourly polytopes are too connected for the statement to apply
c47 = make_cyclic(4, 7)
summary = full_verification(c47)
print("C(4,7) kappa=%d" % summary.connectivity,
      "corollary", summary.corollary4.verdict.value, "overall", summary.overall.value)
