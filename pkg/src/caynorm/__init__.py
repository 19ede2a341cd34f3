"""Cayley digraphs on cyclic and dihedral groups: automorphisms, normality, NNN and CI."""

from .autsearch import (
    AutResult,
    automorphism_group,
    brute_force_aut,
    is_discrete,
    refine,
    unit_partition,
)
from .cayley import (
    CayleyDigraph,
    Digraph,
    build,
    count_4cycles_through_edge,
    edge_list_lines,
    generated_subgroup,
    is_connected,
    is_graph,
)
from .classify import (
    CI_SKIPPED,
    CertificateHypothesisError,
    Classification,
    EngineInconsistency,
    NonNormalityCertificate,
    certify_nonnormal,
    classify,
    connection_masks,
    connection_orbit_reps,
    cyclic_regular_subgroup_invariant,
    enumerate_regular_subgroups,
    nnn_connection_set,
    nnn_witness_subgroup,
    right_regular_group,
    sweep,
    sweep_summary,
    write_jsonl,
)
from .groups import (
    CyclicFactorization,
    GroupAut,
    GroupSpec,
    aut_group,
    aut_stabilizer,
    cyclic_aut,
    cyclic_factorization,
    dihedral_aut,
    fixed_points,
    holomorph,
    order_four_aut,
    prime_order_aut,
    right_regular,
    translation,
)
from .perm import (
    ELEMENT_CAP,
    ElementCapExceeded,
    Perm,
    PermGroup,
    closure,
    is_member,
    is_normal_subgroup,
    is_regular,
    orbit,
)

__version__ = "0.1.0"
