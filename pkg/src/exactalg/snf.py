"""Integer linear algebra: Smith and Hermite normal forms, integer solving.

Matrices are plain lists of integer rows.  Every routine is exact and
deterministic; pivots are chosen by smallest absolute value with ties broken
in row-major order.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence

logger = logging.getLogger("hermackey.snf")

IntMatrix = list[list[int]]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None
) -> IntMatrix:
    """Integer matrix product (``inner`` gives the shared size when ``a`` has no rows)."""
    cols = len(b[0]) if b else 0
    k = len(b) if inner is None else inner
    return [[sum(row[t] * b[t][j] for t in range(k)) for j in range(cols)] for row in a]


def mat_vec(a: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(c * v for c, v in zip(row, x)) for row in a]


def _shape(matrix: Sequence[Sequence[int]], ncols: int | None) -> tuple[int, int]:
    rows = len(matrix)
    if ncols is None:
        ncols = len(matrix[0]) if rows else 0
    return rows, ncols


def smith_normal_form(
    matrix: Sequence[Sequence[int]], ncols: int | None = None
) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``U @ A @ V == S`` and ``S`` in Smith normal form.

    ``U`` and ``V`` are unimodular, the diagonal of ``S`` is non-negative and each
    entry divides the next.  ``ncols`` is needed only for matrices with no rows.
    """
    m, n = _shape(matrix, ncols)
    a = [[int(v) for v in row] for row in matrix]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        ra, rs = a[target], a[source]
        for k in range(n):
            ra[k] += factor * rs[k]
        ua, us = u[target], u[source]
        for k in range(m):
            ua[k] += factor * us[k]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                val = row[j]
                if val and (best is None or abs(val) < best[0]):
                    best = (abs(val), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])

        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)

            residue = None
            for i in range(t + 1, m):
                val = a[i][t]
                if val and (residue is None or abs(val) < residue[0]):
                    residue = (abs(val), i, None)
            for j in range(t + 1, n):
                val = a[t][j]
                if val and (residue is None or abs(val) < residue[0]):
                    residue = (abs(val), None, j)
            if residue is not None:
                if residue[1] is not None:
                    swap_rows(t, residue[1])
                else:
                    swap_cols(t, residue[2])
                continue

            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def diagonal(s: Sequence[Sequence[int]]) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def invariant_factors(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    s, _, _ = smith_normal_form(matrix, ncols)
    return [d for d in diagonal(s) if d]


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """A basis (as row vectors) of the integer kernel ``{x : A x = 0}``."""
    m, n = _shape(matrix, ncols)
    s, _, v = smith_normal_form(matrix, n)
    rank = sum(1 for d in diagonal(s) if d) if m else 0
    return [[v[i][j] for i in range(n)] for j in range(rank, n)]


class IntegerSolver:
    """Solves ``A x = b`` over the integers for many right-hand sides."""

    def __init__(self, matrix: Sequence[Sequence[int]], ncols: int | None = None):
        self.rows, self.cols = _shape(matrix, ncols)
        self.s, self.u, self.v = smith_normal_form(matrix, self.cols)
        self.diag = diagonal(self.s) if self.rows and self.cols else []

    def solve(self, rhs: Sequence[int]) -> list[int] | None:
        y = mat_vec(self.u, rhs)
        z = [0] * self.cols
        for i, val in enumerate(y):
            d = self.diag[i] if i < len(self.diag) else 0
            if d == 0:
                if val:
                    return None
            elif val % d:
                return None
            else:
                z[i] = val // d
        return mat_vec(self.v, z)


def solve_integer_system(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    return IntegerSolver(matrix).solve(rhs)


def hermite_basis(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Row-echelon (Hermite) basis of the lattice spanned by ``rows``.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``.
    """
    pool = [[int(x) for x in r] for r in rows if any(r)]
    basis: IntMatrix = []
    pivots: list[int] = []
    for c in range(ncols):
        while True:
            live = [k for k, r in enumerate(pool) if r[c]]
            if not live:
                break
            piv = min(live, key=lambda k: (abs(pool[k][c]), k))
            prow = pool[piv]
            for k in live:
                if k != piv:
                    q = pool[k][c] // prow[c]
                    pool[k] = [x - q * y for x, y in zip(pool[k], prow)]
            if all(pool[k][c] == 0 for k in live if k != piv):
                if prow[c] < 0:
                    prow = [-x for x in prow]
                basis.append(prow)
                pivots.append(c)
                pool = [r for k, r in enumerate(pool) if k != piv and any(r)]
                break
    for k, c in enumerate(pivots):
        p = basis[k][c]
        for above in range(k):
            q = basis[above][c] // p
            if q:
                basis[above] = [x - q * y for x, y in zip(basis[above], basis[k])]
    return basis


def echelon_coordinates(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> list[int] | None:
    """Coefficients of ``vector`` in an echelon ``basis``; ``None`` if not in the lattice."""
    rest = [int(x) for x in vector]
    coeffs = []
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        if rest[c] % row[c]:
            return None
        q = rest[c] // row[c]
        coeffs.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, row)]
    if any(rest):
        return None
    return coeffs


def sparse_invariant_factors(rows: Sequence[dict[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix given by row dicts.

    Unit pivots are eliminated first, choosing the column that touches the
    fewest rows; the remainder goes through the dense Smith normal form.
    """
    live: dict[int, dict[int, int]] = {k: dict(r) for k, r in enumerate(rows) if r}
    col_rows: dict[int, set[int]] = defaultdict(set)
    for rid, row in live.items():
        for c in row:
            col_rows[c].add(rid)

    units = 0
    progress = True
    while progress:
        progress = False
        for rid in sorted(live, key=lambda r: (len(live[r]), r)):
            row = live.get(rid)
            if not row:
                continue
            candidates = [c for c, val in row.items() if val in (1, -1)]
            if not candidates:
                continue
            c = min(candidates, key=lambda col: (len(col_rows[col]), col))
            sign = row[c]
            for other in sorted(col_rows[c]):
                if other == rid:
                    continue
                orow = live[other]
                factor = orow[c] * sign
                for cc, val in row.items():
                    new = orow.get(cc, 0) - factor * val
                    if new:
                        if cc not in orow:
                            col_rows[cc].add(other)
                        orow[cc] = new
                    elif cc in orow:
                        del orow[cc]
                        col_rows[cc].discard(other)
                if not orow:
                    del live[other]
            for cc in row:
                col_rows[cc].discard(rid)
            del live[rid]
            units += 1
            progress = True

    factors = [1] * units
    if live:
        cols = sorted({c for row in live.values() for c in row})
        where = {c: k for k, c in enumerate(cols)}
        dense = []
        for rid in sorted(live):
            line = [0] * len(cols)
            for c, val in live[rid].items():
                line[where[c]] = val
            dense.append(line)
        logger.debug("dense remainder %dx%d after %d unit pivots", len(dense), len(cols), units)
        factors.extend(invariant_factors(dense))
    return sorted(factors)
