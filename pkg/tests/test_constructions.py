"""Tests for the matrix and group Mackey functors and their comparison maps."""

import pytest

from constructions import (
    apply_construction_to_morphism,
    default_section,
    extension_order_check,
    group_mackey,
    groupring_iso_check,
    matrix_iso_check,
    matrix_mackey,
    section_independence_check,
)
from exactalg import FinGroup, zmod
from exactalg.errors import InvalidAntiInvolution, SectionMismatch
from mackey import check_herm_morphism, check_hermitian_axioms, compose, identity_morphism
from mackey.rank import half_transfer_section, rank_map


def test_matrix_mackey_levels(a3):
    """M2(A/3) has M2(Z/3) underneath and Z/3 ⊕ (Z/3)^2 ⊕ (Z/3)^2 on top."""
    m2 = matrix_mackey(a3, 2)

    assert m2.under.size == 81
    assert m2.fix.size == 3 * 9 * 9
    assert matrix_mackey(a3, 2) is m2


@pytest.mark.parametrize("base", ["a3", "z3"])
def test_matrix_mackey_axioms(base, request):
    """M2 of small Hermitian functors is Hermitian."""
    h = request.getfixturevalue(base)

    assert check_hermitian_axioms(matrix_mackey(h, 2)).passed


def test_matrix_iso_check():
    """M2(underline Z/3) ≅ underline M2(Z/3)."""
    report = matrix_iso_check(zmod(3), 2)

    assert report.passed, report.summary()


@pytest.mark.parametrize("name", ["C1", "C2", "C3"])
def test_groupring_iso_check(groups, name):
    """underline(Z/3)[π] ≅ underline(Z/3[π])."""
    report = groupring_iso_check(zmod(3), groups[name])

    assert report.passed, report.summary()


@pytest.mark.parametrize("base", ["a3", "z3"])
@pytest.mark.parametrize("name", ["C1", "C2", "C3", "S3"])
def test_group_mackey_axioms(groups, name, base, request):
    """L[π] is Hermitian for small L and the catalog groups."""
    h = group_mackey(request.getfixturevalue(base), groups[name])

    assert check_hermitian_axioms(h).passed


def test_group_mackey_levels(a3, groups):
    """A/3[C3]: one τ-fixed element and one free orbit."""
    h = group_mackey(a3, groups["C3"])

    assert h.under.size == 27
    assert h.fix.size == 9 * 3
    assert group_mackey(a3, groups["C3"]) is h


def test_group_mackey_rejects_bad_involution(a3, groups):
    """τ must be an anti-involution of π."""
    with pytest.raises(InvalidAntiInvolution):
        group_mackey(a3, groups["C3"], tau=(0, 2, 2))


def test_section_independence(z3, groups):
    """Different sections of the free orbits give isomorphic functors."""
    assert section_independence_check(z3, groups["C3"]).passed


def test_extension_order(a3, groups):
    """The action does not depend on the summation order."""
    assert extension_order_check(a3, groups["S3"]).passed


def test_apply_construction_to_morphism(groups):
    """Matrix and group constructions carry d to Hermitian morphisms."""
    d = rank_map(3)

    assert check_herm_morphism(apply_construction_to_morphism(d, "matrix", n=2)).passed
    grouped = apply_construction_to_morphism(d, "group", group=groups["C2"])
    assert check_herm_morphism(grouped).passed


def test_mismatched_sections(groups):
    """Applying f with different sections on each side is refused."""
    d = rank_map(3)

    with pytest.raises(SectionMismatch):
        apply_construction_to_morphism(
            d, "group", group=groups["C3"], source_section=(1,), target_section=(2,)
        )


def test_unknown_construction():
    with pytest.raises(ValueError):
        apply_construction_to_morphism(rank_map(3), "tensor")


@pytest.mark.parametrize("name", ["C2", "C3"])
def test_grouped_rank_map_is_rank_map(groups, name):
    """d applied coefficientwise is the same morphism as d built over π."""
    group = groups[name]
    grouped = apply_construction_to_morphism(rank_map(3), "group", group=group)
    direct = rank_map(3, group)

    assert grouped.source is direct.source
    assert grouped.target is direct.target
    assert grouped.f_under == direct.f_under
    assert grouped.f_fix == direct.f_fix


@pytest.mark.parametrize(("which", "options"), [("matrix", {"n": 2}), ("group", {})])
def test_constructions_preserve_composition(groups, which, options):
    """(d∘T/2)[…] = d[…]∘(T/2)[…], and the identity goes to the identity."""
    if which == "group":
        options = {"group": groups["C3"]}
    half, d = half_transfer_section(3), rank_map(3)

    whole = apply_construction_to_morphism(compose(d, half), which, **options)
    pieces = compose(
        apply_construction_to_morphism(d, which, **options),
        apply_construction_to_morphism(half, which, **options),
    )
    assert whole.f_fix == pieces.f_fix
    assert whole.f_under == pieces.f_under

    ident = apply_construction_to_morphism(identity_morphism(d.source), which, **options)
    assert ident.f_fix == identity_morphism(ident.source).f_fix


def test_default_section_follows_labels():
    """With labels out of index order the label-smaller element represents the orbit."""
    cyclic = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    group = FinGroup.from_table(cyclic, ["e", "z", "a"], "C3")

    assert default_section(group, group.inverses) == (2,)
