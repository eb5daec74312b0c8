"""The matrix Mackey functor Mₙ(L)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from exactalg import Element, FinAbGroup, GroupHom, RMatrix, matrix_ring
from mackey.functors import ActionTable, HermMackey, MackeyZ2

logger = logging.getLogger("hermackey.constructions")


@dataclass(frozen=True, eq=False)
class MatrixLayout:
    """Coordinates of Mₙ(L)(∗): entries i<j of L(ℤ/2) row-major, then the diagonal in L(∗)."""

    base: HermMackey
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"matrix dimension must be positive, got {self.n}")

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.n) for j in range(i + 1, self.n))

    @cached_property
    def fix(self) -> FinAbGroup:
        under, fix = self.base.under.orders, self.base.fix.orders
        return FinAbGroup(under * len(self.pairs) + fix * self.n)

    @property
    def _ru(self) -> int:
        return self.base.under.rank

    @property
    def _rf(self) -> int:
        return self.base.fix.rank

    def split(self, x: Element) -> tuple[dict[tuple[int, int], Element], list[Element]]:
        ru, rf = self._ru, self._rf
        x = tuple(x)
        upper = {p: x[k * ru:(k + 1) * ru] for k, p in enumerate(self.pairs)}
        start = len(self.pairs) * ru
        diag = [x[start + i * rf:start + (i + 1) * rf] for i in range(self.n)]
        return upper, diag

    def join(self, upper: dict[tuple[int, int], Element], diag: list[Element]) -> Element:
        zero = self.base.under.zero()
        out: list[int] = []
        for p in self.pairs:
            out.extend(upper.get(p, zero))
        for d in diag:
            out.extend(d)
        return self.fix.reduce(out)

    def restriction(self, x: Element) -> RMatrix:
        """R(B): B_ij above, w(B_ji) below and R(B_ii) on the diagonal."""
        h = self.base
        upper, diag = self.split(x)
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if i < j:
                    row.append(upper[(i, j)])
                elif i > j:
                    row.append(h.w(upper[(j, i)]))
                else:
                    row.append(h.res(diag[i]))
            rows.append(tuple(row))
        return RMatrix(h.ring, tuple(rows))

    def transfer(self, a: RMatrix) -> Element:
        h = self.base
        upper = {(i, j): h.under.add(a[i, j], h.w(a[j, i])) for i, j in self.pairs}
        diag = [h.tr(a[i, i]) for i in range(self.n)]
        return self.join(upper, diag)

    def act(self, a: RMatrix, x: Element) -> Element:
        """Off-diagonal ``(A R(B) w(A))_ij``.

        Diagonal ``T(Σ_{k<l} A_ik B_kl w(A_il)) + Σ_k A_ik·B_kk``.
        """
        h = self.base
        ring = h.ring
        upper, diag = self.split(x)
        p = a @ self.restriction(x) @ a.involution()
        new_upper = {(i, j): p[i, j] for i, j in self.pairs}
        new_diag = []
        for i in range(self.n):
            inner = ring.zero()
            for k, l in self.pairs:
                if any(a[i, k]) and any(upper[(k, l)]):
                    inner = ring.add(inner, ring.product(a[i, k], upper[(k, l)], h.w(a[i, l])))
            acc = h.tr(inner)
            for k in range(self.n):
                if any(a[i, k]):
                    acc = h.fix.add(acc, h.act(a[i, k], diag[k]))
            new_diag.append(acc)
        return self.join(new_upper, new_diag)

    def diagonal_element(self, entries: list[Element]) -> Element:
        return self.join({}, list(entries))


@dataclass(frozen=True)
class MatrixMackeySpec:
    base: HermMackey
    n: int

    def build(self) -> HermMackey:
        return matrix_mackey(self.base, self.n)


@lru_cache(maxsize=None)
def matrix_layout(base: HermMackey, n: int) -> MatrixLayout:
    return MatrixLayout(base, n)


@lru_cache(maxsize=None)
def matrix_mackey(base: HermMackey, n: int) -> HermMackey:
    """Mₙ(L) with levels Mₙ(L(ℤ/2)) and ``(⊕_{i<j} L(ℤ/2)) ⊕ (⊕_i L(∗))``."""
    layout = matrix_layout(base, n)
    ring = matrix_ring(base.ring, n)
    under, fix = ring.additive, layout.fix
    logger.debug("building M%d(%s): |fix| = %d", n, base, fix.size)

    def res_fn(x: Element) -> Element:
        return layout.restriction(x).flat()

    def tr_fn(a: Element) -> Element:
        return layout.transfer(RMatrix.from_flat(base.ring, n, a))

    res = GroupHom.from_function(fix, under, res_fn)
    tr = GroupHom.from_function(under, fix, tr_fn)
    mackey = MackeyZ2(under, fix, ring.w, res, tr, f"M{n}({base})")

    def rule(a: Element, b: Element) -> Element:
        return layout.act(RMatrix.from_flat(base.ring, n, a), b)

    fix_unit = None
    if base.fix_unit is not None:
        fix_unit = layout.diagonal_element([base.fix_unit] * n)
    return HermMackey(
        base=mackey,
        ring=ring,
        action=ActionTable(under, fix, rule=rule),
        fix_unit=fix_unit,
        name=f"M{n}({base})",
    )
