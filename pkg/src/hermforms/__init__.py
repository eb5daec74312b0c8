"""Hermitian forms, their classification, KH₀ and the Witt group."""

from hermforms.classify import (
    Classification,
    IsoClass,
    enumerate_iso_classes,
    gl_elements,
    gl_generators,
    orbit_partition,
)
from hermforms.forms import (
    HermForm,
    Isometry,
    IsometryVerdict,
    act_on_form,
    block_sum,
    compose_isometries,
    form_action,
    hyperbolic,
    identity_isometry,
    inverse_isometry,
    is_form,
    is_isometry,
    negate_form,
    permutation_matrix,
    sym_permutation,
    symmetry_isometry,
    unit_form,
)
from hermforms.kronecker import (
    distributivity_isometry,
    distributivity_permutation,
    kronecker_pattern,
    kronecker_product,
)
from hermforms.ktheory import (
    KH0Map,
    KH0Result,
    WittResult,
    induced_kh0_map,
    kh0,
    rank_homomorphism,
    sign_involution,
    witt0,
)

__all__ = [
    "Classification",
    "HermForm",
    "IsoClass",
    "Isometry",
    "IsometryVerdict",
    "KH0Map",
    "KH0Result",
    "WittResult",
    "act_on_form",
    "block_sum",
    "compose_isometries",
    "distributivity_isometry",
    "distributivity_permutation",
    "enumerate_iso_classes",
    "form_action",
    "gl_elements",
    "gl_generators",
    "hyperbolic",
    "identity_isometry",
    "induced_kh0_map",
    "inverse_isometry",
    "is_form",
    "is_isometry",
    "kh0",
    "kronecker_pattern",
    "kronecker_product",
    "negate_form",
    "orbit_partition",
    "permutation_matrix",
    "rank_homomorphism",
    "sign_involution",
    "sym_permutation",
    "symmetry_isometry",
    "unit_form",
    "witt0",
]
