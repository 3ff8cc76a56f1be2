"""
Links of cube vertices
======================

In the 3-cube the link of a vertex is a hexagon.  One dimension up it is
the boundary of a rhombic dodecahedron: 14 vertices, 24 edges and 12
quadrilaterals, with a 3-connected graph.
"""

from polysep import make_cube, vertex_connectivity, vertex_link

for d in (3, 4):
    link = vertex_link(make_cube(d), 0)
    faces = {}
    for f in link.faces:
        faces[f.dim] = faces.get(f.dim, 0) + 1
    # dim -1 is the empty face
    print("d=%d  link faces by dim %s  kappa=%d"
          % (d, dict(sorted(faces.items())), vertex_connectivity(link.graph)))
