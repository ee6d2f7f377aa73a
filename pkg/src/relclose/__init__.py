"""Relatively closed subgroups of ⟨a⟩⋉⟨w⟩ with cyclic regular part.

The ambient groups are the permutation groups G = A⋉W on Z_n with
W = ⟨w⟩ ≅ Z_n acting by translation and A = ⟨a⟩ acting as w ↦ w^α.  The
package computes subgroup normal forms and holomorph conjugacy, orbit
structure, the radical/closure operators and closedness criteria, the
classification of maximal, second maximal, and three-orbit relatively
closed subgroups, and — over finite fields — the association schemes of
one-dimensional affine groups, with a brute-force oracle cross-checking
every formula path.
"""

from .closure import (
    is_relatively_closed,
    kernel_of_quotient_action,
    radical,
    relative_closure,
)
from .gf import FiniteField, gamma_l1, gf_add, gf_build, gf_mul, gf_neg, gf_sub
from .groups import (
    AmbientGroup,
    DomainError,
    ResourceLimit,
    SubgroupPresentation,
    canonical_presentation,
    conjugate_by_w,
    elem_act,
    elem_inv,
    elem_mul,
    elem_order,
    elem_pow,
    hol_transform,
    make_presentation,
    subgroup_contains,
    subgroup_equal,
)
from .lattice import (
    ClassifiedSubgroup,
    Lattice,
    closed_lattice,
    lattice_to_dot,
    lattice_to_json,
    maximal_intransitive,
    maximal_relatively_closed,
    rank_four,
    second_maximal,
)
from .normal_form import hol_conjugate, is_normal_form, to_normal_form
from .oracle import (
    brute_hol_conjugate,
    oracle_all_subgroups,
    oracle_closed,
    oracle_closure,
    oracle_generate,
    oracle_maximal_closed,
    oracle_orbit_ids,
    oracle_radical,
)
from .orbits import (
    OrbitMultiset,
    orbit_length_predict,
    orbit_multiset,
    orbits_explicit,
)
from .schemes import (
    AssociationScheme,
    SchemeComparison,
    affine_classify,
    scheme_coherence_check,
    scheme_from_binary,
    scheme_from_stabilizer,
    scheme_isomorphic,
    scheme_isomorphism_valid,
    scheme_to_binary,
    scheme_to_json,
)
from .verify import run_battery

__version__ = "0.1.0"

__all__ = [
    "AmbientGroup",
    "AssociationScheme",
    "ClassifiedSubgroup",
    "DomainError",
    "FiniteField",
    "Lattice",
    "OrbitMultiset",
    "ResourceLimit",
    "SchemeComparison",
    "SubgroupPresentation",
    "affine_classify",
    "brute_hol_conjugate",
    "canonical_presentation",
    "closed_lattice",
    "conjugate_by_w",
    "elem_act",
    "elem_inv",
    "elem_mul",
    "elem_order",
    "elem_pow",
    "gamma_l1",
    "gf_add",
    "gf_build",
    "gf_mul",
    "gf_neg",
    "gf_sub",
    "hol_conjugate",
    "hol_transform",
    "is_normal_form",
    "is_relatively_closed",
    "kernel_of_quotient_action",
    "lattice_to_dot",
    "lattice_to_json",
    "make_presentation",
    "maximal_intransitive",
    "maximal_relatively_closed",
    "oracle_all_subgroups",
    "oracle_closed",
    "oracle_closure",
    "oracle_generate",
    "oracle_maximal_closed",
    "oracle_orbit_ids",
    "oracle_radical",
    "orbit_length_predict",
    "orbit_multiset",
    "orbits_explicit",
    "radical",
    "rank_four",
    "relative_closure",
    "run_battery",
    "scheme_coherence_check",
    "scheme_from_binary",
    "scheme_from_stabilizer",
    "scheme_isomorphic",
    "scheme_isomorphism_valid",
    "scheme_to_binary",
    "scheme_to_json",
    "second_maximal",
    "subgroup_contains",
    "subgroup_equal",
    "to_normal_form",
]
