"""Tour of the permutation layer: composition, orbits, closure, normality.

Every other layer of the toolkit is built on these primitives, so this is
the place to get comfortable with the conventions.
"""

from caynorm import Perm, PermGroup, closure, is_normal_subgroup, is_regular, orbit

# Permutations are tuples of images.  Composition is the right-action
# convention: (p * q)(x) = q(p(x)), i.e. p acts first.
p = Perm([1, 2, 0])
q = Perm([0, 2, 1])
print("p =", list(p), " q =", list(q))
print("p * q =", list(p * q), "  (apply p, then q)")
print("p inverse =", list(p.inverse()), " p * p^-1 =", list(p * p.inverse()))
print("order of p:", p.order(), " cycle lengths:", p.cycle_lengths())

# Orbits: the smallest set containing a point and closed under generators.
three_cycle = Perm([1, 2, 0, 3])
print("\norbit of 0 under a 3-cycle on 4 points:", sorted(orbit([three_cycle], 0)))
print("orbit of 2 under no generators:", sorted(orbit([], 2)))

# Closure enumerates a generated group, deterministically sorted.
rotations = closure([Perm([1, 2, 3, 0])], cap=100)
print("\n<4-cycle> has", len(rotations), "elements:")
for g in rotations:
    print("  ", list(g))

# A PermGroup carries generators and enumerates elements lazily.
sym3 = PermGroup(3, [Perm([1, 0, 2]), Perm([1, 2, 0])])
alt3 = PermGroup(3, [Perm([1, 2, 0])])
print("\n|Sym(3)| =", sym3.order(), " |Alt(3)| =", alt3.order())
print("Alt(3) normal in Sym(3):", is_normal_subgroup(sym3, alt3))
print("<(0 1)> normal in Sym(3):", is_normal_subgroup(sym3, PermGroup(3, [Perm([1, 0, 2])])))

# Regular means transitive with trivial point stabilizers, equivalently
# transitive with order equal to the degree.
print("\nSym(3) regular on 3 points:", is_regular(sym3), " (order 6 != degree 3)")
print("Alt(3) regular on 3 points:", is_regular(alt3))
