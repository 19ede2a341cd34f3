"""The automorphism engine: equitable refinement, search, and the brute oracle."""

import math

from caynorm import (
    Digraph,
    GroupSpec,
    automorphism_group,
    brute_force_aut,
    build,
    nnn_connection_set,
    refine,
    unit_partition,
)

# Equitable refinement: split cells until every vertex of a cell has the
# same number of out- and in-neighbors in every cell.
path = Digraph.from_arcs(3, [(0, 1), (1, 2)])
print("path 0->1->2 refines to:", refine(path, unit_partition(3)))
cycle = build(GroupSpec.cyclic(4), [1])
print("directed 4-cycle stays coarse:", refine(cycle, unit_partition(4)))
print("after individualizing vertex 0:", refine(cycle, [[0], [1, 2, 3]]))

# The search returns generators plus the exact order, computed from orbit
# sizes along the individualization base, so huge groups are no problem.
print("\ndirected 8-cycle:", automorphism_group(build(GroupSpec.cyclic(8), [1])).order)
print("undirected 6-cycle:", automorphism_group(build(GroupSpec.cyclic(6), [1, 5])).order)
empty = Digraph(16, [0] * 16)
print("empty digraph on 16 vertices:", automorphism_group(empty).order, "=", "16! =", math.factorial(16))

# Cayley digraphs seed the search with the right regular representation.
nnn6 = build(GroupSpec.dihedral(6), nnn_connection_set(6))
res = automorphism_group(nnn6)
print("\ncanonical NNN graph on D12: |Aut| =", res.order, "with", len(res.generators), "generators")

# Up to 8 vertices a factorial filter provides an independent oracle.
small = build(GroupSpec.cyclic(8), [1, 2])
print("\nCay(C8, {a, a^2}): search =", automorphism_group(small).order,
      " brute force =", brute_force_aut(small).order)
