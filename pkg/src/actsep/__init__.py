"""Finite monoid acts, their congruences, and separability certificates."""

from .acts import (
    ActHomomorphism,
    FiniteAct,
    PartialAct,
    act_from_table,
    act_homomorphism,
    closure_partial,
    coset_act,
    cyclic_subacts,
    decompose,
    disjoint_union,
    is_faithful,
    partial_act_from_table,
    preorder_and_green,
    rees_quotient,
    regular_act,
    subact_as_act,
    subact_generated,
    subacts,
    transport_along_ideal_complement,
    transport_along_retraction,
)
from .congruences import (
    Congruence,
    all_congruences,
    cyclic_act_from_right_congruence,
    enumerate_congruences,
    equality_congruence,
    kernel,
    meet,
    principal_closure,
    quotient,
    quotient_monoid,
    rees_congruence,
    restrict,
    two_sided_violation,
    universal_congruence,
    verify_congruence,
)
from .monoids import (
    FiniteMonoid,
    RankReport,
    ReesMatrixSpec,
    StrongSemilatticeSpec,
    adjoin_identity,
    are_isomorphic,
    cyclic_group,
    find_isomorphism,
    left_zero_adjoined,
    monoid_from_table,
    normalize_sandwich,
    null_adjoined,
    rectangular_band_adjoined,
    rees_element_index,
    rees_element_triple,
    rees_matrix_monoid,
    right_ideals,
    sandwich_rank,
    strong_semilattice_monoid,
    structural_queries,
    submonoid,
    transformation_closure,
    trivial_monoid,
)
from .partitions import Partition, partition_from_assignment, partition_from_blocks
from .separability import (
    BracketProfile,
    ConditionReport,
    SeparationCertificate,
    act_monoid_correspondence,
    bracket_profile,
    check_condition,
    clifford_witness,
    disjoint_union_fallback,
    disjoint_union_witness,
    is_clifford,
    minimal_separating_index,
    rclass_witness,
    rees_bracket_decomposition,
    rees_cyclic_sss_witness,
    separate,
    sigma_a,
)

__all__ = [name for name in dir() if not name.startswith("_")]
