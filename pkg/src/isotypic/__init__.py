"""Exact isotypic decompositions of finite-group representations over F_p,
with graded and univariate Galois-cover verification models."""

from .arith import (
    Poly,
    RatFunc,
    choose_prime,
    limit_at_one,
    poly_gcd,
    primitive_root,
    root_of_unity,
    series_prefix,
)
from .characters import (
    CharacterTable,
    central_idempotents,
    char_dual,
    char_ext_power,
    char_sym_power,
    char_tensor,
    char_trivial,
    character_table,
    convolve,
    inner_mult,
    restrict_invariant_dim,
    splitting_element,
    structure_constants,
    tensor_multiplicities,
)
from .cover import (
    LinearCoverAction,
    degree_piece,
    generic_multiplicity,
    invariants_series_check,
    molien_multiplicity_series,
    perm_action,
    product_structure_check,
    pushforward_report,
    reflection_action,
    scalar_action,
    validate_action,
)
from .cyclic import (
    CyclicCoverModel,
    build_cyclic,
    decompose_pushforward,
    intermediate_fixed_ring,
    normal_basis_element,
    phi_det,
    phi_elementary_divisors,
    phi_equivariance_check,
    phi_matrix,
)
from .groups import (
    ConjugacyClasses,
    Group,
    Permutation,
    Subgroup,
    all_subgroups,
    build_group,
    conjugacy_classes,
    exponent,
    group_from_name,
    group_from_text,
    parse_cycles,
    parse_generator_text,
    power_class_map,
    subgroup_closure,
)
from .reps import (
    IsotypicDecomposition,
    MatrixRep,
    MultiplicitySpace,
    RepType,
    character_of,
    decompose,
    direct_sum_rep,
    dual_rep,
    evaluation_iso_check,
    ext_power_rep,
    hom_dim,
    irreducible_models,
    isotypic_projector,
    multiplicity_space,
    permutation_rep,
    regular_rep,
    rep_from_matrices,
    subgroup_invariants,
    sym_power_rep,
    tensor_rep,
    trivial_rep,
)

__version__ = "0.1.0"
