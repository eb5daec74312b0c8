"""Tests for integer normal forms and integer solving."""

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from exactalg import hermite_basis, integer_kernel, invariant_factors, smith_normal_form
from exactalg.snf import IntegerSolver, mat_mul, solve_integer_system, sparse_invariant_factors

MATRICES = [
    [[2, 4], [6, 8]],
    [[2, 0, 0], [0, 3, 0], [0, 0, 4]],
    [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
    [[6, 4, 10], [12, 8, 20]],
    [[0, 0], [0, 0]],
    [[3]],
]


def test_smith_normal_form_small():
    """[[2,4],[6,8]] has Smith form diag(2, 4) with unimodular transforms."""
    a = [[2, 4], [6, 8]]
    s, u, v = smith_normal_form(a)

    assert s == [[2, 0], [0, 4]]
    assert mat_mul(mat_mul(u, a), v) == s


@pytest.mark.parametrize("a", MATRICES)
def test_invariant_factors_match_sympy(a):
    """Nonzero invariant factors agree with sympy's Smith normal form."""
    expected = Matrix(a)
    snf = sympy_smith_normal_form(expected)
    diag = sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)

    assert sorted(invariant_factors(a)) == diag


@pytest.mark.parametrize("a", MATRICES)
def test_smith_normal_form_divisibility(a):
    """Each diagonal entry divides the next and U·A·V = S."""
    s, u, v = smith_normal_form(a)
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    nonzero = [d for d in diag if d]

    assert mat_mul(mat_mul(u, a), v) == s
    assert all(d > 0 for d in nonzero)
    assert all(b % a_ == 0 for a_, b in zip(nonzero, nonzero[1:]))


def test_no_rows_needs_column_count():
    """An empty relation matrix on 3 generators has no invariant factors."""
    assert invariant_factors([], 3) == []
    assert integer_kernel([], 3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_integer_kernel():
    """Kernel vectors are annihilated and span a rank-1 lattice here."""
    a = [[1, 2, 3], [4, 5, 6]]
    kernel = integer_kernel(a)

    assert len(kernel) == 1
    assert mat_mul(a, [[x] for x in kernel[0]]) == [[0], [0]]


def test_integer_solver():
    """2x = 4 is solvable over Z, 2x = 3 is not."""
    solver = IntegerSolver([[2]])

    assert solver.solve([4]) == [2]
    assert solver.solve([3]) is None
    assert solve_integer_system([[1, 1], [0, 2]], [3, 4]) == [1, 2]


def test_hermite_basis_spans_same_lattice():
    """The Hermite basis of 2Z ⊕ 2Z generated redundantly has two rows."""
    basis = hermite_basis([[2, 0], [0, 2], [2, 2]], 2)

    assert len(basis) == 2
    assert sorted(invariant_factors(basis)) == [2, 2]


def test_sparse_invariant_factors():
    """Sparse elimination agrees with the dense Smith normal form."""
    dense = [[1, 2, 0], [0, 2, 4], [3, 0, 6]]
    rows = [{j: v for j, v in enumerate(r) if v} for r in dense]

    assert sparse_invariant_factors(rows) == invariant_factors(dense)
