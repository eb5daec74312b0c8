"""Tests for KH0, the Witt group and induced maps."""

import pytest

from exactalg import GroupHom
from exactalg.errors import TooLarge, TruncationTooShallow
from hermforms import (
    HermForm,
    hyperbolic,
    induced_kh0_map,
    kh0,
    rank_homomorphism,
    sign_involution,
    unit_form,
    witt0,
)
from mackey import compose
from mackey.rank import half_transfer_section, rank_map


def test_kh0_burnside(a3):
    """KH0(A/3) = Z + Z/2 from forms of dimension at most 4."""
    k = kh0(a3, 4)

    assert k.group.describe() == "Z + Z/2 (stable)"
    assert k.hyperbolic_class is not None
    assert k.unit_class is not None


def test_kh0_underline(z3):
    assert kh0(z3, 4).group.describe() == "Z + Z/2 (stable)"


def test_kh0_truncated(a3):
    """At bound 1 there are no relations and no hyperbolic class."""
    k = kh0(a3, 1)

    assert k.group.truncated
    assert k.group.describe().endswith("(truncated)")
    assert k.hyperbolic_class is None
    assert k.generator_count == 4


def test_kh0_bounds(a3):
    with pytest.raises(TruncationTooShallow):
        kh0(a3, 0)
    with pytest.raises(TooLarge):
        kh0(a3, 3, max_elements=100)


def test_witt_burnside(a3):
    """W0(A/3) = Z/4."""
    assert witt0(a3, 4).group.describe() == "Z/4 (stable)"


@pytest.mark.slow
def test_witt_underline_z5(registry):
    """W0(Z/5) = Z/2 + Z/2."""
    assert witt0(registry.mackey("underline-Z5"), 4).group.notation == "Z/2 + Z/2"


def test_rank_homomorphism(a3):
    """Unit form has rank one, the hyperbolic plane rank two."""
    k = kh0(a3, 2)
    rank = rank_homomorphism(k)

    assert rank(k.unit_class) == (1,)
    assert rank(k.element_of(hyperbolic(a3))) == (2,)


def test_sign_involution(a3):
    """B ↦ -B squares to the identity on KH0."""
    k = kh0(a3, 2)
    s = sign_involution(k)

    assert s.compose(s) == GroupHom.identity(s.source)


def test_induced_identity():
    """d∘(T/2) is the identity of underline(Z/3), and so is its map on KH0."""
    f = compose(rank_map(3), half_transfer_section(3))
    km = induced_kh0_map(f, 2)

    assert km.hom == GroupHom.identity(km.hom.source)
    assert sorted(km.class_map) == sorted(km.class_map.values())


def test_induced_rank_map(a3):
    """d sends the unit form of A/3 to the unit form of Z/3."""
    km = induced_kh0_map(rank_map(3), 2)
    source, target = km.source, km.target

    unit = source.generator(unit_form(a3))
    assert km.class_map[unit] == target.generator(unit_form(target.base))


def test_witt_underline_z3(z3):
    """W0(Z/3) = Z/4: <1> has order four and <1> + <2> is hyperbolic."""
    w = witt0(z3, 4)

    assert w.group.notation == "Z/4"
    assert not w.group.truncated


def test_rank_map_merges_unit_classes(a3, z3):
    """<(1,0)> and <(0,2)> are not isometric over A/3 but both become <1> over Z/3."""
    km = induced_kh0_map(rank_map(3), 2)
    one = km.source.generator(HermForm.from_entries(a3, [(1, 0)]))
    half_transfer = km.source.generator(HermForm.from_entries(a3, [(0, 2)]))

    assert one != half_transfer
    assert km.class_map[one] == km.class_map[half_transfer]
    assert km.class_map[one] == km.target.generator(unit_form(z3))


@pytest.mark.parametrize(
    ("m", "group_name"),
    [(3, None), (5, None), pytest.param(3, "C2", marks=pytest.mark.slow)],
)
def test_rank_after_half_transfer_is_identity(groups, m, group_name):
    """d∘(T/2) induces the identity on KH0 for each modulus and group."""
    group = None if group_name is None else groups[group_name]
    f = compose(rank_map(m, group), half_transfer_section(m, group))
    km = induced_kh0_map(f, 2)

    assert km.source is km.target
    assert km.hom == GroupHom.identity(km.hom.source)
    assert all(i == j for i, j in km.class_map.items())


@pytest.mark.parametrize(
    ("m", "group_name"),
    [(3, None), (5, None), pytest.param(3, "C2", marks=pytest.mark.slow)],
)
def test_unital_maps_fix_hyperbolic_and_unit(groups, m, group_name):
    group = None if group_name is None else groups[group_name]
    f = rank_map(m, group)
    km = induced_kh0_map(f, 2)

    assert f.unital
    h_source = km.source.generator(hyperbolic(f.source))
    assert km.class_map[h_source] == km.target.generator(hyperbolic(f.target))
    assert km.hom(km.source.hyperbolic_class) == km.target.hyperbolic_class
    assert km.hom(km.source.unit_class) == km.target.unit_class
