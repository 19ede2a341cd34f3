import random
from collections import Counter
from math import gcd

import pytest

from caynorm import (
    GroupSpec,
    aut_group,
    aut_stabilizer,
    cyclic_aut,
    cyclic_factorization,
    dihedral_aut,
    fixed_points,
    holomorph,
    is_normal_subgroup,
    order_four_aut,
    prime_order_aut,
    right_regular,
    translation,
)
from caynorm.groups import is_automorphism


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec.cyclic(0)
    with pytest.raises(ValueError):
        GroupSpec.dihedral(1)
    with pytest.raises(ValueError):
        GroupSpec("quaternion", 2)
    assert GroupSpec.cyclic(5).order == 5
    assert GroupSpec.dihedral(6).order == 12
    assert GroupSpec.dihedral(6).name == "D12"


def test_multiply_examples():
    d12 = GroupSpec.dihedral(6)
    assert d12.mul(7, 2) == 11  # (a b)(a^2) = a^-1 b = a^5 b
    assert d12.mul(6, 6) == 0  # b^2 = 1
    assert GroupSpec.cyclic(9).mul(4, 7) == 2


def test_multiply_code_range():
    with pytest.raises(ValueError):
        GroupSpec.cyclic(4).mul(4, 0)
    with pytest.raises(ValueError):
        GroupSpec.dihedral(3).inv(6)


@pytest.mark.parametrize("G", [GroupSpec.cyclic(1), GroupSpec.cyclic(9), GroupSpec.dihedral(2), GroupSpec.dihedral(5), GroupSpec.dihedral(6)])
def test_group_axioms_exhaustive(G):
    for x in G.elements():
        assert G.mul(x, 0) == x == G.mul(0, x)
        assert G.mul(x, G.inv(x)) == 0
        for y in G.elements():
            for z in G.elements():
                assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))


def test_elem_order():
    d16 = GroupSpec.dihedral(8)
    assert d16.elem_order(0) == 1
    assert d16.elem_order(1) == 8
    assert d16.elem_order(4) == 2
    assert all(d16.elem_order(8 + i) == 2 for i in range(8))
    assert GroupSpec.cyclic(12).elem_order(8) == 3


def test_right_regular():
    c5 = right_regular(GroupSpec.cyclic(5))
    assert c5.degree == 5 and c5.order() == 5 and c5.is_regular()
    d12 = right_regular(GroupSpec.dihedral(6))
    assert d12.degree == 12 and d12.order() == 12
    # R(a) in D_16 has order 8 as a permutation
    assert translation(GroupSpec.dihedral(8), 1).order() == 8


def test_aut_group_cyclic():
    auts = aut_group(GroupSpec.cyclic(12))
    assert sorted(a.r for a in auts) == [1, 5, 7, 11]
    for n in (1, 2, 7, 12, 16):
        assert len(aut_group(GroupSpec.cyclic(n))) == euler_phi(n)


def test_aut_group_dihedral_counts():
    assert len(aut_group(GroupSpec.dihedral(8))) == 32
    for n in (3, 4, 5, 6, 8):
        assert len(aut_group(GroupSpec.dihedral(n))) == n * euler_phi(n)
    # Klein group: the full automorphism group has 6 elements
    assert len(aut_group(GroupSpec.dihedral(2))) == 6


@pytest.mark.parametrize(
    "G",
    [
        GroupSpec.cyclic(9),
        GroupSpec.cyclic(16),
        GroupSpec.cyclic(32),
        GroupSpec.dihedral(2),
        GroupSpec.dihedral(6),
        GroupSpec.dihedral(8),
        GroupSpec.dihedral(16),
    ],
)
def test_auts_are_homomorphisms(G):
    for a in aut_group(G):
        assert is_automorphism(G, a.images)


def test_aut_group_order_as_permutations():
    from caynorm import PermGroup

    G = GroupSpec.dihedral(5)
    gens = [a.perm() for a in aut_group(G) if not a.is_identity()]
    assert PermGroup(G.order, gens).order() == 5 * euler_phi(5)


def test_d16_aut_order_census():
    census = Counter(a.order() for a in aut_group(GroupSpec.dihedral(8)))
    assert census == {1: 1, 2: 15, 4: 8, 8: 8}


def test_aut_stabilizer_nnn_sets():
    d12 = GroupSpec.dihedral(6)
    stab = aut_stabilizer(d12, {1, 5, 6, 9})
    assert len(stab) == 4
    # Klein group: every non-identity element an involution, abelian
    assert all(a.order() <= 2 for a in stab)
    perms = [a.perm() for a in stab]
    assert all(p * q == q * p for p in perms for q in perms)

    d24 = GroupSpec.dihedral(12)
    stab = aut_stabilizer(d24, {1, 11, 12, 15, 18, 21})
    assert len(stab) == 8
    # dihedral of order 8: order multiset {1,2,2,2,2,2,4,4}, non-abelian
    assert sorted(a.order() for a in stab) == [1, 2, 2, 2, 2, 2, 4, 4]
    perms = [a.perm() for a in stab]
    assert any(p * q != q * p for p in perms for q in perms)


def test_aut_stabilizer_full_set_and_closure():
    c12 = GroupSpec.cyclic(12)
    stab = aut_stabilizer(c12, set(range(1, 12)))
    assert len(stab) == euler_phi(12)
    images = {a.images for a in stab}
    for a in stab:
        for b in stab:
            assert a.compose(b).images in images


def test_aut_stabilizer_rejects_identity_in_set():
    with pytest.raises(ValueError):
        aut_stabilizer(GroupSpec.cyclic(5), {0, 1})


def test_holomorph_orders():
    assert holomorph(GroupSpec.cyclic(8)).order() == 32
    assert holomorph(GroupSpec.dihedral(8)).order() == 512
    assert holomorph(GroupSpec.dihedral(2)).order() == 24


@pytest.mark.parametrize("G", [GroupSpec.cyclic(8), GroupSpec.cyclic(12), GroupSpec.dihedral(2), GroupSpec.dihedral(6)])
def test_right_regular_normal_in_holomorph(G):
    assert is_normal_subgroup(holomorph(G), right_regular(G))


def test_prime_order_aut_values():
    assert prime_order_aut(9, 3).r == 4
    assert prime_order_aut(9, 3).order() == 3
    assert prime_order_aut(18, 3).r == 13
    assert prime_order_aut(18, 3).order() == 3
    assert prime_order_aut(25, 5).r == 6
    assert prime_order_aut(25, 5).order() == 5


def test_prime_order_aut_errors():
    with pytest.raises(ValueError):
        prime_order_aut(15, 3)  # multiplicity 1
    with pytest.raises(ValueError):
        prime_order_aut(9, 5)  # 5 does not divide 9


def test_prime_order_aut_has_multiplicative_order_p():
    for n, p in ((9, 3), (18, 3), (27, 3), (25, 5), (16, 2), (36, 3)):
        a = prime_order_aut(n, p)
        assert pow(a.r, p, n) == 1 and a.r != 1
        assert a.order() == p


def test_order_four_aut():
    assert order_four_aut(16).r == 5
    assert order_four_aut(32).r == 9
    assert order_four_aut(16).order() == 4
    with pytest.raises(ValueError):
        order_four_aut(8)  # 2-adic valuation 3 < 4
    for n in (16, 32, 48):
        beta = order_four_aut(n)
        assert beta.compose(beta).images == prime_order_aut(n, 2).images


def test_fixed_points():
    c9 = GroupSpec.cyclic(9)
    assert fixed_points(c9, [prime_order_aut(9, 3)]) == {0, 3, 6}
    assert fixed_points(c9, []) == set(range(9))
    d16 = GroupSpec.dihedral(8)
    inversion = dihedral_aut(8, 7, 0)
    assert fixed_points(d16, [inversion]) == {0, 4, 8, 12}


@pytest.mark.parametrize("G", [GroupSpec.cyclic(12), GroupSpec.dihedral(6)])
def test_fixed_points_is_subgroup(G):
    rng = random.Random(7)
    auts = aut_group(G)
    for _ in range(10):
        chosen = rng.sample(auts, rng.randint(1, 3))
        fixed = fixed_points(G, chosen)
        assert 0 in fixed
        for x in fixed:
            assert G.inv(x) in fixed
            for y in fixed:
                assert G.mul(x, y) in fixed


def test_cyclic_factorization_ordering():
    fac = cyclic_factorization(720)
    assert fac.factors == ((5, 1), (3, 2), (2, 4))
    assert fac.component_generators == (144, 80, 45)
    assert cyclic_factorization(1).factors == ()
    assert cyclic_factorization(9).factors == ((3, 2),)
    assert cyclic_factorization(8).factors == ((2, 3),)
    product = 1
    for p, k in cyclic_factorization(360).factors:
        product *= p**k
    assert product == 360


def test_aut_json_forms():
    assert cyclic_aut(9, 4).to_json() == {"r": 4}
    assert dihedral_aut(6, 5, 3).to_json() == {"r": 5, "s": 3}
    # the Klein group's unparametrized automorphisms fall back to an images table
    specials = [a for a in aut_group(GroupSpec.dihedral(2)) if a.r is None]
    assert len(specials) == 4
    assert all(set(a.to_json()) == {"images"} for a in specials)


def test_aut_constructor_validation():
    with pytest.raises(ValueError):
        cyclic_aut(9, 3)
    with pytest.raises(ValueError):
        dihedral_aut(6, 2, 0)


def test_group_json_round_trip():
    for G in (GroupSpec.cyclic(7), GroupSpec.dihedral(4)):
        assert GroupSpec.from_json(G.to_json()) == G
