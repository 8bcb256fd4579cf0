"""
Ordered partitions and the hexagon
==================================

The downset of a cube chain is a product of permutohedra.  Here the
two-dimensional permutohedron: 13 ordered partitions of {1, 2, 3}.
"""

from cubehom.homology import nerve_of_poset
from cubehom.permutohedra import enumerate_ordered_partitions, fundamental_cycle
from cubehom.simplicial import simplicial_boundary

oposet = enumerate_ordered_partitions((3,))
print(len(oposet.elements), "ordered partitions, top", oposet.top)

# the order complex is the barycentric subdivision of a hexagon
nerve_cx = nerve_of_poset(oposet.elements, oposet.strict_up())
print("simplices per dimension:", nerve_cx.counts())

# fundamental cycle: 12 triangles with signs +-1
cycle = fundamental_cycle((3,))
for simplex, coeff in sorted(cycle.items()):
    print(f"{coeff:+d}", simplex)

# its boundary avoids the top element, so it is a relative cycle
boundary = simplicial_boundary(cycle)
print(len(boundary), "edges on the boundary hexagon;",
      "top used:", any(oposet.top in s for s in boundary))

# relative to the boundary there is exactly one class, in degree 2
t = oposet.elements.index(oposet.top)
print(nerve_cx.homology(keep=lambda s: t in s).trimmed())
