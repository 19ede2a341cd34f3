"""The coded group models: arithmetic, automorphisms, holomorphs, fixed points.

Cyclic groups store a^i as code i.  Dihedral groups of order 2n store a^i
as code i and the reflection a^i*b as code n+i.
"""

from collections import Counter

from caynorm import (
    GroupSpec,
    aut_group,
    aut_stabilizer,
    cyclic_factorization,
    fixed_points,
    holomorph,
    is_normal_subgroup,
    order_four_aut,
    prime_order_aut,
    right_regular,
)

d12 = GroupSpec.dihedral(6)
print("D12 codes: a =", 1, " b =", 6, " a^3*b =", 9)
print("(a b)(a^2) =", d12.mul(7, 2), " -> a^5 b, code 11")
print("b * b =", d12.mul(6, 6), " -> identity")

# The right regular representation acts by x -> x*g and is always regular.
r = right_regular(d12)
print("\n|R(D12)| =", r.order(), " regular:", r.is_regular())

# Automorphism groups come in closed form: phi(n) maps for C_n and
# n*phi(n) maps for D_{2n} with n >= 3 (the Klein group D_4 has all 6).
c12 = GroupSpec.cyclic(12)
print("\nAut(C12) units:", [a.r for a in aut_group(c12)])
d16 = GroupSpec.dihedral(8)
census = Counter(a.order() for a in aut_group(d16))
print("Aut(D16): size", len(aut_group(d16)), " order census", dict(sorted(census.items())))

# The set stabilizer keeps only automorphisms fixing a connection set.
stab = aut_stabilizer(d12, {1, 5, 6, 9})
print("\n|Aut(D12, {a, a^-1, b, a^3 b})| =", len(stab), " (a Klein four-group)")

# The holomorph R(G) extended by all of Aut(G); R(G) is normal inside it.
hol = holomorph(d16)
print("\n|Hol(D16)| =", hol.order(), " R normal in Hol:", is_normal_subgroup(hol, right_regular(d16)))

# Prime factorization with odd primes descending and 2 last, and the two
# canonical obstruction automorphisms built through it.
print("\nfactorization of 720:", cyclic_factorization(720).factors)
alpha = prime_order_aut(18, 3)
print("order-3 automorphism of C18: a -> a^%d, order %d" % (alpha.r, alpha.order()))
beta = order_four_aut(16)
print("order-4 automorphism of C16: a -> a^%d, order %d" % (beta.r, beta.order()))
print("its square is the order-2 map a -> a^%d" % prime_order_aut(16, 2).r)

# Fixed-point subgroups.
c9 = GroupSpec.cyclic(9)
print("\nfixed points of a -> a^4 on C9:", sorted(fixed_points(c9, [prime_order_aut(9, 3)])))
