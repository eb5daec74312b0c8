"""Tests for finite rings with anti-involution, matrices and finite groups."""

import pytest

from exactalg import (
    FinGroup,
    RMatrix,
    check_anti_involution,
    check_ring_axioms,
    cyclic,
    group_algebra,
    invert_matrix,
    is_invertible,
    matrix_ring,
    zmod,
)
from exactalg.errors import InvalidAntiInvolution, InvalidGroupTable, NotUnit, TooLarge


@pytest.mark.parametrize("m", [3, 4, 5, 9])
def test_zmod_axioms(m):
    """Z/m is a ring and the identity is an anti-involution."""
    ring = zmod(m)

    assert check_ring_axioms(ring)
    assert check_anti_involution(ring)
    assert ring.size == m


def test_zmod_units():
    """Units of Z/9 are the residues prime to 3."""
    ring = zmod(9)

    assert len(ring.units()) == 6
    assert ring.inverse((2,)) == (5,)
    with pytest.raises(NotUnit):
        ring.inverse((3,))


def test_matrix_ring_transpose():
    """M2(Z/3) is non-commutative and w is the transpose."""
    ring = matrix_ring(zmod(3), 2)
    e12 = (0, 1, 0, 0)

    assert check_ring_axioms(ring)
    assert check_anti_involution(ring)
    assert not ring.is_commutative()
    assert ring.involution(e12) == (0, 0, 1, 0)
    assert ring.size == 81


def test_matrix_ring_is_cached():
    """Repeated construction returns the same object."""
    assert matrix_ring(zmod(3), 2) is matrix_ring(zmod(3), 2)


def test_group_algebra():
    """Z/3[C2] has 9 elements and w(g) = g⁻¹ is an anti-involution."""
    ring = group_algebra(zmod(3), cyclic(2))

    assert ring.size == 9
    assert ring.is_commutative()
    assert check_ring_axioms(ring)
    assert check_anti_involution(ring)


def test_invert_matrix_methods_agree():
    """Solving and exhaustive search find the same inverse."""
    ring = zmod(5)
    m = RMatrix.from_rows(ring, [[1, 2], [3, 4]])
    solved = invert_matrix(m)

    assert solved @ m == RMatrix.identity(ring, 2)
    assert invert_matrix(m, method="exhaustive") == solved


def test_invert_singular_matrix():
    """A rank-one matrix over Z/3 is not invertible."""
    m = RMatrix.from_rows(zmod(3), [[1, 1], [1, 1]])

    assert not is_invertible(m)
    with pytest.raises(NotUnit):
        invert_matrix(m)


def test_exhaustive_inverse_limit():
    """Exhaustive inversion refuses more candidates than its limit."""
    m = RMatrix.identity(zmod(5), 2)

    with pytest.raises(TooLarge):
        invert_matrix(m, method="exhaustive", limit=100)


def test_catalog_groups(groups):
    """Catalog orders and abelianizations."""
    orders = {name: g.order for name, g in groups.items()}

    assert orders == {"C1": 1, "C2": 2, "C3": 3, "C4": 4, "S3": 6, "D4": 8, "Q8": 8}
    assert groups["S3"].abelianization().notation == "Z/2"
    assert groups["Q8"].abelianization().notation == "Z/2 + Z/2"
    assert groups["D4"].abelianization().notation == "Z/2 + Z/2"
    assert groups["C4"].abelianization().notation == "Z/4"


def test_conjugacy_classes(groups):
    """S3 has three conjugacy classes, Q8 five."""
    assert len(groups["S3"].conjugacy_classes()) == 3
    assert len(groups["Q8"].conjugacy_classes()) == 5


def test_invalid_group_table():
    """A non-associative table is rejected."""
    with pytest.raises(InvalidGroupTable):
        FinGroup.from_table([[0, 1, 2], [1, 0, 0], [2, 1, 0]])


def test_anti_involution_check(groups):
    """Inversion is an anti-involution of S3; a transposition swap is not."""
    s3 = groups["S3"]
    s3.check_anti_involution(s3.inverses)
    bad = list(range(6))
    a, b = s3.index_of("(12)"), s3.index_of("(123)")
    bad[a], bad[b] = bad[b], bad[a]

    with pytest.raises(InvalidAntiInvolution):
        s3.check_anti_involution(bad)
