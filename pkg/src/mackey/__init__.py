"""ℤ/2-Mackey functors with Hermitian and Tambara structure."""

from mackey.catalog import (
    burnside_mod,
    burnside_tambara,
    catalog_mackey,
    underline_of_ring,
    underline_tambara,
)
from mackey.functors import (
    ActionTable,
    HermMackey,
    MackeyZ2,
    TambaraZ2,
    check_hermitian_axioms,
    check_mackey_axioms,
    check_tambara_axioms,
    tambara_forget,
)
from mackey.morphisms import HermMorphism, check_herm_morphism, compose, identity_morphism

__all__ = [
    "ActionTable",
    "HermMackey",
    "HermMorphism",
    "MackeyZ2",
    "TambaraZ2",
    "burnside_mod",
    "burnside_tambara",
    "catalog_mackey",
    "check_herm_morphism",
    "check_hermitian_axioms",
    "check_mackey_axioms",
    "check_tambara_axioms",
    "compose",
    "identity_morphism",
    "tambara_forget",
    "underline_of_ring",
    "underline_tambara",
]
