"""Exact arithmetic substrate: abelian groups, integer linear algebra, finite rings and groups."""

from exactalg.abelian import (
    Cokernel,
    Element,
    FinAbGroup,
    GroupHom,
    PresentedGroup,
    Subgroup,
    abelian_group_from_relations,
    cokernel,
    subgroup_generated,
)
from exactalg.checks import CheckReport, CheckResult
from exactalg.groups import (
    FinGroup,
    catalog_groups,
    cyclic,
    dihedral,
    quaternion,
    symmetric,
)
from exactalg.rings import (
    FinRingInv,
    RMatrix,
    check_anti_involution,
    check_ring_axioms,
    group_algebra,
    invert_matrix,
    is_invertible,
    matrix_ring,
    zmod,
)
from exactalg.snf import (
    hermite_basis,
    integer_kernel,
    invariant_factors,
    smith_normal_form,
    sparse_invariant_factors,
)

__all__ = [
    "CheckReport",
    "CheckResult",
    "Cokernel",
    "Element",
    "FinAbGroup",
    "FinGroup",
    "FinRingInv",
    "GroupHom",
    "PresentedGroup",
    "RMatrix",
    "Subgroup",
    "abelian_group_from_relations",
    "catalog_groups",
    "check_anti_involution",
    "check_ring_axioms",
    "cokernel",
    "cyclic",
    "dihedral",
    "group_algebra",
    "hermite_basis",
    "integer_kernel",
    "invariant_factors",
    "invert_matrix",
    "is_invertible",
    "matrix_ring",
    "quaternion",
    "smith_normal_form",
    "sparse_invariant_factors",
    "subgroup_generated",
    "symmetric",
    "zmod",
]
