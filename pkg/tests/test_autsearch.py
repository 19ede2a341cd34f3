import math
import random

import pytest

from caynorm import (
    Digraph,
    GroupSpec,
    Perm,
    automorphism_group,
    brute_force_aut,
    build,
    closure,
    is_discrete,
    nnn_connection_set,
    orbit,
    refine,
    unit_partition,
)
from caynorm.autsearch import partition_is_valid


def path_digraph():
    return Digraph.from_arcs(3, [(0, 1), (1, 2)])


def random_digraph(rng, n):
    rows = [rng.getrandbits(n) & ~(1 << u) for u in range(n)]
    return Digraph(n, rows)


def test_refine_directed_cycle_stays_unit():
    dg = build(GroupSpec.cyclic(4), [1])
    assert refine(dg, unit_partition(4)) == [[0, 1, 2, 3]]


def test_refine_path_splits_to_singletons():
    # degree signatures (out,in): (1,0), (1,1), (0,1) all differ
    cells = refine(path_digraph(), unit_partition(3))
    assert is_discrete(cells)
    assert partition_is_valid(cells, 3)


def test_refine_vertex_transitive_graph_stays_unit():
    dg = build(GroupSpec.dihedral(6), nnn_connection_set(6))
    assert refine(dg, unit_partition(12)) == [list(range(12))]


def test_refine_idempotent():
    rng = random.Random(12)
    for _ in range(30):
        dg = random_digraph(rng, rng.randint(2, 9))
        once = refine(dg, unit_partition(dg.n))
        assert refine(dg, once) == once
        assert partition_is_valid(once, dg.n)


def test_refine_respects_given_partition():
    dg = build(GroupSpec.cyclic(4), [1])
    cells = refine(dg, [[0], [1, 2, 3]])
    assert cells[0] == [0]
    assert is_discrete(cells)  # individualizing one vertex of a cycle pins the rest


def test_aut_directed_cycles():
    for n in (1, 2, 3, 5, 8):
        dg = build(GroupSpec.cyclic(n), [1 % n] if n > 1 else [])
        assert automorphism_group(dg).order == n


def test_aut_undirected_six_cycle():
    assert automorphism_group(build(GroupSpec.cyclic(6), [1, 5])).order == 12


def test_aut_empty_and_complete():
    for m in (1, 4, 6, 16):
        assert automorphism_group(Digraph(m, [0] * m)).order == math.factorial(m)
    full = (1 << 6) - 1
    dg = Digraph(6, [full & ~(1 << u) for u in range(6)])
    assert automorphism_group(dg).order == math.factorial(6)


def test_aut_nnn_graphs():
    assert automorphism_group(build(GroupSpec.dihedral(6), nnn_connection_set(6))).order == 48
    assert automorphism_group(build(GroupSpec.dihedral(12), nnn_connection_set(12))).order == 192


def test_closure_of_aut_generators():
    aut = automorphism_group(build(GroupSpec.dihedral(6), nnn_connection_set(6)))
    assert len(closure(aut.generators, cap=100)) == 48


def test_aut_generators_preserve_arcs():
    rng = random.Random(13)
    for _ in range(20):
        G = rng.choice([GroupSpec.cyclic(8), GroupSpec.dihedral(4)])
        codes = rng.sample(range(1, G.order), rng.randint(0, G.order - 1))
        dg = build(G, codes)
        aut = automorphism_group(dg)
        for g in aut.generators:
            for u, v in dg.arcs():
                assert dg.has_arc(g[u], g[v])
        assert aut.order % G.order == 0  # R(G) is always a subgroup


def test_aut_vertex_transitive_on_connected_cayley():
    rng = random.Random(14)
    for _ in range(15):
        G = rng.choice([GroupSpec.cyclic(7), GroupSpec.dihedral(5)])
        codes = rng.sample(range(1, G.order), rng.randint(1, G.order - 1))
        dg = build(G, codes)
        aut = automorphism_group(dg)
        assert orbit(aut.generators, 0) == set(range(G.order))


def test_aut_rejects_oversized_digraph():
    with pytest.raises(ValueError):
        automorphism_group(Digraph(65, [0] * 65))


def test_aut_rejects_bad_seed():
    dg = build(GroupSpec.cyclic(4), [1])
    with pytest.raises(ValueError):
        automorphism_group(dg, seeds=[Perm([1, 0, 2, 3])])


def test_brute_force_examples():
    assert brute_force_aut(build(GroupSpec.cyclic(3), [1])).order == 3
    assert brute_force_aut(build(GroupSpec.cyclic(4), [1, 3])).order == 8
    with pytest.raises(ValueError):
        brute_force_aut(Digraph(9, [0] * 9))


def test_brute_force_returns_full_element_list():
    result = brute_force_aut(build(GroupSpec.cyclic(4), [1, 3]))
    assert len(result.generators) == result.order
    assert len(set(result.generators)) == result.order


def test_oracle_equivalence_smoke():
    # full corpus runs in the acceptance suite; here a quick cross-section
    rng = random.Random(15)
    cases = [build(GroupSpec.cyclic(8), [1, 2]), build(GroupSpec.dihedral(4), [1, 7, 4])]
    cases += [random_digraph(rng, rng.randint(2, 7)) for _ in range(40)]
    for dg in cases:
        search = automorphism_group(dg)
        brute = brute_force_aut(dg)
        assert search.order == brute.order
        brute_set = set(brute.generators)
        assert all(g in brute_set for g in search.generators)


def test_generators_generate_group_of_stated_order():
    rng = random.Random(99)
    cases = [
        build(GroupSpec.dihedral(6), nnn_connection_set(6)),
        build(GroupSpec.cyclic(9), [3, 6]),
    ]
    cases += [random_digraph(rng, rng.randint(2, 8)) for _ in range(10)]
    for dg in cases:
        res = automorphism_group(dg)
        if res.generators:
            assert len(closure(res.generators, cap=200_000)) == res.order
        else:
            assert res.order == 1


def test_aut_result_json():
    res = automorphism_group(build(GroupSpec.cyclic(4), [1]))
    data = res.to_json()
    assert data["order"] == 4
    assert all(isinstance(g, list) for g in data["generators"])
    big = automorphism_group(Digraph(20, [0] * 20))
    assert isinstance(big.to_json()["order"], str)  # 20! does not fit a JSON float
