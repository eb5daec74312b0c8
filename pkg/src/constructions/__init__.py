"""Matrix and group Mackey functors, their functoriality and comparison isomorphisms."""

from constructions.comparison import (
    apply_construction_to_morphism,
    extension_order_check,
    groupring_iso_check,
    matrix_iso_check,
    section_independence_check,
)
from constructions.groupring import (
    GroupLayout,
    GroupMackeySpec,
    default_section,
    group_layout,
    group_mackey,
)
from constructions.matrix import MatrixLayout, MatrixMackeySpec, matrix_layout, matrix_mackey

__all__ = [
    "GroupLayout",
    "GroupMackeySpec",
    "MatrixLayout",
    "MatrixMackeySpec",
    "apply_construction_to_morphism",
    "default_section",
    "extension_order_check",
    "group_layout",
    "group_mackey",
    "groupring_iso_check",
    "matrix_iso_check",
    "matrix_layout",
    "matrix_mackey",
    "section_independence_check",
]
