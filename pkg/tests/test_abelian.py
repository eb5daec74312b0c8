"""Tests for finite abelian groups, homomorphisms and cokernels."""

from exactalg import (
    FinAbGroup,
    GroupHom,
    PresentedGroup,
    abelian_group_from_relations,
    cokernel,
    subgroup_generated,
)


def test_group_enumeration():
    """Z/2 ⊕ Z/3 enumerates lexicographically with matching indices."""
    g = FinAbGroup((2, 3))
    elements = list(g.elements())

    assert g.size == 6
    assert elements[0] == (0, 0)
    assert elements[-1] == (1, 2)
    assert all(g.element(g.index(x)) == x for x in elements)


def test_cokernel_invariant_factors():
    """Z^2 / <(2,4), (6,8)> is Z/2 ⊕ Z/4."""
    group = abelian_group_from_relations(2, [[2, 4], [6, 8]])

    assert sorted(group.orders) == [2, 4]
    assert str(group) == "Z/2 + Z/4"


def test_cokernel_with_free_part():
    """Z^3 / <(1,1,0)> is free of rank 2."""
    pres = cokernel(3, [[1, 1, 0]])

    assert pres.presented().notation == "Z^2"
    assert pres.image([1, 0, 0]) == pres.group.neg(pres.image([0, 1, 0]))


def test_presented_group_notation():
    """Notation lists the free part first, then the torsion."""
    assert PresentedGroup(1, (2,)).notation == "Z + Z/2"
    assert PresentedGroup().notation == "0"
    assert PresentedGroup(0, (4,), stable=True).describe() == "Z/4 (stable)"
    assert PresentedGroup(2, (), truncated=True).describe() == "Z^2 (truncated)"


def test_presented_group_from_orders():
    """Orders 2 and 3 combine to the invariant factor 6."""
    assert PresentedGroup.from_orders([2, 3]).torsion == (6,)
    assert PresentedGroup.from_orders([0, 2]).free_rank == 1


def test_hom_compose_and_kernel():
    """Multiplication by 2 on Z/4 has kernel {0, 2}."""
    z4 = FinAbGroup((4,))
    double = GroupHom.from_images(z4, z4, [(2,)])

    assert double.compose(double) == GroupHom.zero(z4, z4)
    assert double.kernel().size == 2
    assert double.kernel().contains((2,))
    assert not double.is_bijective()
    assert double.preimage((2,)) in ((1,), (3,))
    assert double.preimage((1,)) is None


def test_ill_defined_hom_detected():
    """Z/2 → Z/4 sending the generator to 1 is not well defined."""
    z2, z4 = FinAbGroup((2,)), FinAbGroup((4,))

    assert not GroupHom.from_images(z2, z4, [(1,)]).is_well_defined()
    assert GroupHom.from_images(z2, z4, [(2,)]).is_well_defined()


def test_subgroup_generated():
    """<(2, 0), (0, 3)> in Z/4 ⊕ Z/6 is Z/2 ⊕ Z/2."""
    sub = subgroup_generated(FinAbGroup((4, 6)), [(2, 0), (0, 3)])

    assert sub.size == 4
    assert sub.contains((2, 3))
    assert not sub.contains((1, 0))
