"""Real and dihedral nerves, edgewise subdivision, fixed points and homology."""

from realnerve.homology import (
    ChainComplex,
    Coefficients,
    chain_complex,
    check_boundary_squared,
    homology,
    homology_notation,
    induces_identity_on_homology,
)
from realnerve.involutions import InvolutionClass, involution_classes
from realnerve.monoids import MonoidAI
from realnerve.nerves import (
    DihedralNerve,
    OnePoint,
    RealNerve,
    SymCyNerve,
    SymNerve,
    check_di_fixed_iso,
    check_sigma_fixed_iso,
    di_fixed_map,
    dihedral_nerve,
    edgewise_subdivide,
    fixed_projection_on_bar,
    group_nerve,
    lambda_map,
    level_counts,
    monoid_catalog,
    one_point,
    projection_p,
    real_nerve,
    sigma_fixed_map,
    subdivided_dihedral,
    subdivided_real,
    sym_nerve,
    symcy_nerve,
)
from realnerve.ssets import (
    ComponentSSet,
    EdgewiseSubdivision,
    FixedSimplices,
    InvolutiveSSet,
    SemiSimplicialSet,
    SimplicialMap,
    component_sset,
    connected_components,
    coface,
    first_half_map,
    fixed_inclusion,
    fixed_simplices,
    identity_map,
    involute_morphism,
)

__all__ = [
    "ChainComplex",
    "Coefficients",
    "ComponentSSet",
    "DihedralNerve",
    "EdgewiseSubdivision",
    "FixedSimplices",
    "InvolutionClass",
    "InvolutiveSSet",
    "MonoidAI",
    "OnePoint",
    "RealNerve",
    "SemiSimplicialSet",
    "SimplicialMap",
    "SymCyNerve",
    "SymNerve",
    "chain_complex",
    "check_boundary_squared",
    "check_di_fixed_iso",
    "check_sigma_fixed_iso",
    "coface",
    "component_sset",
    "connected_components",
    "di_fixed_map",
    "dihedral_nerve",
    "edgewise_subdivide",
    "first_half_map",
    "fixed_inclusion",
    "fixed_projection_on_bar",
    "fixed_simplices",
    "group_nerve",
    "homology",
    "homology_notation",
    "identity_map",
    "induces_identity_on_homology",
    "involute_morphism",
    "involution_classes",
    "lambda_map",
    "level_counts",
    "monoid_catalog",
    "one_point",
    "projection_p",
    "real_nerve",
    "sigma_fixed_map",
    "subdivided_dihedral",
    "subdivided_real",
    "sym_nerve",
    "symcy_nerve",
]
