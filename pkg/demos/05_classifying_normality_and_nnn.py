"""Normality, regular-subgroup census, NNN verdicts and non-normality certificates."""

import json

from caynorm import (
    GroupSpec,
    PermGroup,
    automorphism_group,
    build,
    certify_nonnormal,
    classify,
    enumerate_regular_subgroups,
    is_normal_subgroup,
    nnn_connection_set,
    nnn_witness_subgroup,
    prime_order_aut,
)

# classify produces the full verdict record for one (group, set) pair.
d12 = GroupSpec.dihedral(6)
record = classify(d12, nnn_connection_set(6))
print("canonical NNN instance on D12:")
print(json.dumps(record.to_record(), indent=2))

# The census finds every regular subgroup isomorphic to the base group;
# here the right translations plus two conjugate non-normal copies.
aut = automorphism_group(build(d12, nnn_connection_set(6)))
regs = enumerate_regular_subgroups(aut, d12)
ambient = PermGroup(12, aut.generators)
print("\nregular subgroups isomorphic to D12:", len(regs))
for H in regs:
    print("   normal in Aut:", is_normal_subgroup(ambient, H))

# The explicit witness: R(ab) composed with inversion, together with R(b).
witness = nnn_witness_subgroup(6)
x, y = witness.generators
print("\nwitness: |H| =", witness.order(), " x order =", x.order(), " y order =", y.order())
print("dihedral relation y^-1 x y = x^-1:", x.conjugate_by(y) == x.inverse())

# Certificates of non-normality from set-stabilizing automorphisms: for the
# cyclic group of order 9, any set stabilized by a -> a^4 is non-normal.
c9 = GroupSpec.cyclic(9)
alpha = prime_order_aut(9, 3)
cert = certify_nonnormal(c9, (1, 4, 7), [alpha], (0, 3, 6))
print("\nC9 with S = {a, a^4, a^7}: condition", cert.condition,
      "fired, fixed-subgroup index", cert.fixed_index)
print("certificate re-checks:", cert.verify(c9, (1, 4, 7)))
print("classifier agrees (normal =", classify(c9, (1, 4, 7)).normal, ")")

# A complete digraph is never normal for |G| >= 4: Aut is symmetric.
print("\ncomplete digraph on C4:", json.dumps(classify(GroupSpec.cyclic(4), [1, 2, 3]).to_record()))
