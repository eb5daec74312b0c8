"""Tests for real and dihedral nerves, subdivision and fixed points."""

import pytest

from exactalg.errors import InvalidAntiInvolution, InvalidGroupTable, TooLarge
from realnerve import (
    FixedSimplices,
    MonoidAI,
    check_di_fixed_iso,
    check_sigma_fixed_iso,
    coface,
    connected_components,
    dihedral_nerve,
    edgewise_subdivide,
    first_half_map,
    fixed_inclusion,
    fixed_projection_on_bar,
    fixed_simplices,
    group_nerve,
    involute_morphism,
    involution_classes,
    lambda_map,
    level_counts,
    monoid_catalog,
    projection_p,
    real_nerve,
    subdivided_dihedral,
    subdivided_real,
    sym_nerve,
    symcy_nerve,
)


@pytest.fixture
def c2(groups):
    return MonoidAI.from_group(groups["C2"])


@pytest.fixture
def s3(groups):
    return MonoidAI.from_group(groups["S3"])


def test_monoid_from_group(s3):
    """Inversion fixes the identity and the three transpositions."""
    assert s3.size == 6
    assert len(s3.fixed) == 4
    assert s3.unit == 0


def test_monoid_validation():
    with pytest.raises(InvalidGroupTable):
        MonoidAI(((0, 1),), (0,))
    with pytest.raises(InvalidGroupTable):
        MonoidAI(((1, 0), (0, 0)), (0, 1))
    with pytest.raises(InvalidAntiInvolution):
        MonoidAI(((0, 1), (1, 0)), (1, 1))


def test_non_unital_monoid():
    """The zero-multiplication monoid on two elements has no unit."""
    m = MonoidAI(((0, 0), (0, 0)), (0, 1))

    assert m.unit is None
    assert real_nerve(m, 3).check_involution().passed


def test_monoid_catalog():
    """Besides the groups the catalog holds a monoid without unit and one with a zero."""
    catalog = monoid_catalog()
    null, mul = catalog["Null2"], catalog["MulZ3"]

    assert null.unit is None
    assert mul.unit == 1
    assert level_counts(sym_nerve(null, 2)) == [2, 4, 8]
    for m in (null, mul):
        assert check_sigma_fixed_iso(m, 2).passed
        assert check_di_fixed_iso(m, 2).passed


def test_level_counts(c2, s3):
    assert level_counts(real_nerve(c2, 3)) == [1, 2, 4, 8]
    assert level_counts(dihedral_nerve(c2, 2)) == [2, 4, 8]
    assert level_counts(sym_nerve(s3, 1)) == [4, 24]
    assert level_counts(symcy_nerve(c2, 1)) == [4, 8]


@pytest.mark.parametrize("build", [real_nerve, dihedral_nerve, sym_nerve, symcy_nerve])
def test_face_identities(s3, build):
    assert build(s3, 3).check_face_identities().passed


@pytest.mark.parametrize("build", [real_nerve, dihedral_nerve])
def test_real_involutions(s3, build):
    """w d_i = d_{p-i} w on the unsubdivided nerves."""
    x = build(s3, 3)

    assert not x.simplicial_involution
    assert x.check_involution().passed


def test_subdivision_is_simplicial(c2):
    """sd_e turns the real involution into a simplicial one."""
    sd = subdivided_real(c2, 2)

    assert sd.truncation == 2
    assert sd.simplicial_involution
    assert sd.check_involution().passed
    assert sd.check_face_identities().passed


def test_fixed_subdivided_levels(c2):
    """Fixed 3-simplices of N^σ C2 are (m, c, w m) with c fixed."""
    fixed = FixedSimplices(subdivided_real(c2, 2))

    assert level_counts(fixed) == [2, 4, 8]
    assert fixed.simplices(0) == [(0,), (1,)]
    assert fixed.check_face_identities().passed


@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
@pytest.mark.parametrize("subdivide", [subdivided_real, subdivided_dihedral])
def test_fixed_levels_match_filtering(groups, name, subdivide):
    """Direct listing agrees with filtering by the involution at every level."""
    sd = subdivide(MonoidAI.from_group(groups[name]), 2)
    fixed = FixedSimplices(sd)

    for p in range(3):
        filtered = [x for x in sd.simplices(p) if sd.involution(p, x) == x]
        assert fixed.simplices(p) == sorted(filtered)
    assert fixed.check_listing().passed


def test_wrong_fixed_listing_fails(c2, monkeypatch):
    sd = subdivided_real(c2, 1)
    monkeypatch.setattr(sd.base, "fixed_subdivided", lambda p: [(0,) * (2 * p + 1)])
    fixed = FixedSimplices(sd)

    report = fixed.check_listing()
    assert not report.passed
    assert "(1,) is fixed but not listed" in report.first_failure().witness


@pytest.mark.parametrize("name", ["C2", "S3"])
def test_fixed_point_identifications(groups, name):
    m = MonoidAI.from_group(groups[name])
    sigma = check_sigma_fixed_iso(m, 2)

    assert sigma.passed
    assert check_di_fixed_iso(m, 2).passed
    assert [r.name for r in sigma.results][:3] == [
        "level 0 fixed listing",
        "level 1 fixed listing",
        "level 2 fixed listing",
    ]


def test_projection_maps(c2, s3):
    assert projection_p(c2, 2).check_simplicial().passed
    assert projection_p(s3, 2, fixed=True).check_simplicial().passed
    assert fixed_projection_on_bar(s3, 2).check_simplicial().passed


def test_lambda_map(groups):
    """λ lands in the fixed simplices and is a left inverse of the first half."""
    lam = lambda_map(groups["C3"], 3)

    assert lam.check_simplicial().passed
    back = first_half_map(lam.target.parent).compose(fixed_inclusion(lam.target).compose(lam))
    assert back.is_levelwise_bijective()


def test_morphism_involution():
    assert involute_morphism((0, 1), 3) == (2, 3)
    assert involute_morphism((0, 2, 3), 3) == (0, 1, 3)
    assert coface(2, 1) == (0, 2)
    with pytest.raises(ValueError):
        involute_morphism((1, 0), 3)


def test_components(s3):
    """Components of N sym S3 are the involution classes."""
    assert len(connected_components(sym_nerve(s3, 1))) == 2


def test_involution_classes(groups):
    s3 = involution_classes(groups["S3"])

    assert [(c.size, c.centralizer.order) for c in s3] == [(1, 6), (3, 2)]
    assert s3[1].label(groups["S3"]) == "(12)"
    assert len(involution_classes(groups["Q8"])) == 2
    assert len(involution_classes(groups["D4"])) == 4


def test_simplex_limit(groups):
    x = group_nerve(groups["C3"], 4)
    x.max_simplices = 10

    assert len(x.simplices(2)) == 9
    with pytest.raises(TooLarge):
        x.simplices(3)


def test_edgewise_subdivide(c2):
    """Level p of sd_e X is level 2p+1 of X with d_i acting as d_i d_{2p+1-i}."""
    x = real_nerve(c2, 5)
    sd = edgewise_subdivide(x)

    assert sd.truncation == 2
    assert sd.simplices(1) == x.simplices(3)
    assert sd.face(1, 0, (1, 0, 1)) == x.face(2, 0, x.face(3, 3, (1, 0, 1)))
    assert len(fixed_simplices(sd).simplices(1)) == 4
    with pytest.raises(ValueError):
        edgewise_subdivide(sd)
