"""Tests for Hermitian forms, isometries and their classification."""

import pytest

from exactalg import RMatrix, is_invertible, zmod
from exactalg.errors import NotAForm, TooLarge
from hermforms import (
    HermForm,
    IsometryVerdict,
    act_on_form,
    block_sum,
    enumerate_iso_classes,
    form_action,
    gl_generators,
    hyperbolic,
    identity_isometry,
    is_form,
    is_isometry,
    negate_form,
    sym_permutation,
    symmetry_isometry,
    unit_form,
)


def test_from_entries(a3):
    """Integer diagonal entries are multiples of the fixed unit."""
    b = HermForm.from_entries(a3, [1])

    assert b.element == (1, 0)
    assert b == unit_form(a3)
    assert str(b) == "⟨(1, 0)⟩"


def test_not_a_form(a3):
    """(1, 1) restricts to 1 + 2 = 0 in Z/3."""
    with pytest.raises(NotAForm):
        HermForm.from_entries(a3, [(1, 1)])


def test_act_on_form(a3):
    """2·(1, 0) = (2, 1) for the Burnside action."""
    two = RMatrix.from_rows(a3.ring, [[2]])

    assert act_on_form(two, unit_form(a3)).element == (2, 1)


def test_isometry_verdicts(a3):
    b = unit_form(a3)
    b2 = HermForm(a3, 1, (2, 1))
    two = RMatrix.from_rows(a3.ring, [[2]])
    one = RMatrix.identity(a3.ring, 1)

    assert is_isometry(two, b2, b) is IsometryVerdict.ISOMETRY
    assert is_isometry(one, b2, b) is IsometryVerdict.NOT_A_MORPHISM
    assert not is_isometry(one, b2, b)
    assert is_isometry(one, b, hyperbolic(a3)) is IsometryVerdict.NOT_A_MORPHISM


def test_identity_isometry(a3):
    b = hyperbolic(a3)

    assert identity_isometry(b).source == b


def test_block_sum(a3):
    """⟨1⟩ ⊕ H keeps the hyperbolic entry in position (2, 3)."""
    b = block_sum(unit_form(a3), hyperbolic(a3))

    assert b.n == 3
    assert b.upper[(1, 2)] == (1,)
    assert b.upper[(0, 1)] == (0,)
    assert b.diagonal == [(1, 0), (0, 0), (0, 0)]


def test_symmetry_isometry(a3):
    """τ_{1,2}: ⟨1⟩ ⊕ H → H ⊕ ⟨1⟩ is an isometry."""
    f = symmetry_isometry(unit_form(a3), hyperbolic(a3))

    assert f.source == block_sum(unit_form(a3), hyperbolic(a3))
    assert f.target == block_sum(hyperbolic(a3), unit_form(a3))


def test_hyperbolic_restriction(z3):
    restriction = hyperbolic(z3, 2).restriction()

    assert restriction[0, 1] == (1,)
    assert restriction[1, 0] == (1,)
    assert restriction[0, 0] == (0,)


def test_negate_form(a3):
    assert negate_form(unit_form(a3)).element == (2, 0)


def test_classify_a3_rank_one(a3):
    """Four classes of one-dimensional forms over A/3."""
    c = enumerate_iso_classes(a3, 1)

    assert len(c) == 4
    assert c.total_forms == 6
    assert [cls.representative.element for cls in c] == [(0, 1), (0, 2), (1, 0), (1, 2)]
    assert [cls.size for cls in c] == [1, 1, 2, 2]
    assert c.class_of(HermForm(a3, 1, (2, 1))).representative == unit_form(a3)


def test_class_index_rejects_non_forms(a3):
    c = enumerate_iso_classes(a3, 1)

    with pytest.raises(NotAForm):
        c.class_index((1, 1))


@pytest.mark.parametrize("n", [1, 2])
def test_generators_match_exhaustive(z3, n):
    """Orbits under generators of GLₙ agree with orbits under all of GLₙ."""
    gens = enumerate_iso_classes(z3, n, "generators")
    full = enumerate_iso_classes(z3, n, "exhaustive")

    assert [c.representative for c in gens] == [c.representative for c in full]
    assert [c.size for c in gens] == [c.size for c in full]


def test_gl_generators_are_invertible():
    ring = zmod(4)

    assert all(g.n == 2 and is_invertible(g) for g in gl_generators(ring, 2))


def test_classification_limits(a3):
    with pytest.raises(TooLarge):
        enumerate_iso_classes(a3, 2, max_elements=10)
    with pytest.raises(ValueError):
        enumerate_iso_classes(a3, 1, method="random")


def test_is_form(a3):
    """Invertibility is decided on the restriction b + 2c."""
    assert is_form(a3, 1, (1, 0))
    assert not is_form(a3, 1, (1, 1))
    assert not is_form(a3, 2, hyperbolic(a3).layout.fix.zero())


def test_form_action_dimension(a3):
    with pytest.raises(ValueError):
        form_action(RMatrix.identity(a3.ring, 2), unit_form(a3))


def test_sym_permutation(z3):
    """τ_{1,2} moves the first coordinate to the end."""
    p = sym_permutation(z3, 1, 2)

    assert p[2, 0] == (1,)
    assert p[0, 1] == (1,)
    assert p[1, 2] == (1,)
    assert p[0, 0] == (0,)
