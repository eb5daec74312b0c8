"""Finite rings with anti-involution, stored by structure constants.

A ring element is a coordinate tuple of its additive group.  The product of
generators ``e_i * e_j`` is ``constants[i][j]``; bilinearity extends it.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, replace
from functools import cached_property, lru_cache

from exactalg.abelian import Element, FinAbGroup, GroupHom
from exactalg.checks import CheckReport
from exactalg.errors import NotUnit, TooLarge
from exactalg.groups import FinGroup

EXHAUSTIVE_INVERSE_LIMIT = 10**4


@dataclass(frozen=True, eq=False)
class FinRingInv:
    additive: FinAbGroup
    constants: tuple[tuple[Element, ...], ...]
    one: Element
    w: GroupHom
    name: str = ""

    def __post_init__(self):
        r = self.additive.rank
        if len(self.constants) != r or any(len(row) != r for row in self.constants):
            raise ValueError(f"structure constants must form a {r}x{r} table")
        constants = tuple(tuple(self.additive.reduce(c) for c in row) for row in self.constants)
        object.__setattr__(self, "constants", constants)
        object.__setattr__(self, "one", self.additive.reduce(self.one))
        if self.w.source != self.additive or self.w.target != self.additive:
            raise ValueError("involution must be an endomorphism of the additive group")

    @cached_property
    def _terms(self) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
        return tuple(
            tuple(tuple((k, c) for k, c in enumerate(vec) if c) for vec in row)
            for row in self.constants
        )

    @property
    def size(self) -> int:
        return self.additive.size

    def zero(self) -> Element:
        return self.additive.zero()

    def add(self, x: Element, y: Element) -> Element:
        return self.additive.add(x, y)

    def sub(self, x: Element, y: Element) -> Element:
        return self.additive.sub(x, y)

    def neg(self, x: Element) -> Element:
        return self.additive.neg(x)

    def scalar(self, k: int) -> Element:
        return self.additive.scale(k, self.one)

    def mul(self, x: Element, y: Element) -> Element:
        acc = [0] * self.additive.rank
        terms = self._terms
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = terms[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, c in row[j]:
                    acc[k] += f * c
        return self.additive.reduce(acc)

    def product(self, *factors: Element) -> Element:
        result = self.one
        for f in factors:
            result = self.mul(result, f)
        return result

    def involution(self, x: Element) -> Element:
        return self.w(x)

    def elements(self):
        return self.additive.elements()

    def with_involution(self, w: GroupHom, name: str | None = None) -> FinRingInv:
        return replace(self, w=w, name=self.name if name is None else name)

    def is_commutative(self) -> bool:
        r = self.additive.rank
        return all(self.constants[i][j] == self.constants[j][i] for i in range(r) for j in range(i))

    def left_multiplication(self, x: Element) -> GroupHom:
        return GroupHom.from_function(self.additive, self.additive, lambda y: self.mul(x, y))

    def inverse(self, x: Element) -> Element:
        y = self.left_multiplication(x).preimage(self.one)
        if y is None or self.mul(y, x) != self.one:
            raise NotUnit(f"{x} is not a unit of {self.name or 'the ring'}")
        return y

    def is_unit(self, x: Element) -> bool:
        try:
            self.inverse(x)
        except NotUnit:
            return False
        return True

    def units(self) -> list[Element]:
        return [x for x in self.elements() if self.is_unit(x)]

    def unit_group_generators(self) -> list[Element]:
        """A generating set of the unit group, chosen greedily in element order."""
        units = self.units()
        reached = {self.one}
        gens: list[Element] = []
        for u in units:
            if u in reached:
                continue
            gens.append(u)
            frontier = list(reached)
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = self.mul(x, g)
                        if y not in reached:
                            reached.add(y)
                            nxt.append(y)
                frontier = nxt
        return gens

    def __str__(self) -> str:
        return self.name or f"ring of order {self.size}"


def check_ring_axioms(ring: FinRingInv) -> CheckReport:
    """Well-defined constants, associativity and unit laws, checked on generators."""
    report = CheckReport(f"ring axioms of {ring}")
    group = ring.additive
    basis = group.basis()
    r = group.rank

    def constants_ok(ij):
        i, j = ij
        c = ring.constants[i][j]
        for o in (group.orders[i], group.orders[j]):
            if o and any(group.scale(o, c)):
                return f"e{i}*e{j} = {c} is not killed by the order {o}"
        return None

    pairs = itertools.product(range(r), repeat=2)
    report.verify("structure constants well defined", pairs, constants_ok)

    def assoc(triple):
        x, y, z = triple
        left, right = ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z))
        return None if left == right else f"(xy)z={left} but x(yz)={right} for x={x}, y={y}, z={z}"

    report.verify("associativity", itertools.product(basis, repeat=3), assoc)

    def unital(x):
        if ring.mul(ring.one, x) != x or ring.mul(x, ring.one) != x:
            return f"1*{x} or {x}*1 differs from {x}"
        return None

    report.verify("unit", basis, unital)
    return report


def check_anti_involution(ring: FinRingInv) -> CheckReport:
    """Verify w∘w = id, w(1) = 1 and w(xy) = w(y)w(x).

    Both sides of each identity are additive (resp. biadditive), so checking
    generators (resp. pairs of generators) covers every element.
    """
    report = CheckReport(f"anti-involution of {ring}")
    w = ring.w
    basis = ring.additive.basis()

    def well_defined(_):
        j = w.ill_defined_generator()
        return None if j is None else f"w does not respect the order of generator {j}"

    report.verify("w well defined", [None], well_defined)

    def involutive(x):
        y = w(w(x))
        return None if y == x else f"w(w({x})) = {y}"

    report.verify("w∘w = id", basis, involutive)
    report.verify(
        "w(1) = 1", [ring.one], lambda one: None if w(one) == one else f"w(1) = {w(one)}"
    )

    def anti(pair):
        x, y = pair
        left, right = w(ring.mul(x, y)), ring.mul(w(y), w(x))
        if left == right:
            return None
        return f"x={x}, y={y}: w(xy)={left} but w(y)w(x)={right}"

    report.verify("w(xy) = w(y)w(x)", itertools.product(basis, repeat=2), anti)
    return report


@lru_cache(maxsize=None)
def zmod(m: int) -> FinRingInv:
    """ℤ/m with the identity involution."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    group = FinAbGroup((m,))
    return FinRingInv(group, (((1,),),), (1,), GroupHom.identity(group), f"Z/{m}")


@lru_cache(maxsize=None)
def matrix_ring(base: FinRingInv, n: int) -> FinRingInv:
    """n×n matrices over ``base`` with the conjugate transpose ``w(A)_ij = w(A_ji)``."""
    r = base.additive.rank
    group = FinAbGroup(base.additive.orders * (n * n))

    def gen(i: int, j: int, k: int) -> int:
        return (i * n + j) * r + k

    size = group.rank
    constants = [[group.zero() for _ in range(size)] for _ in range(size)]
    for i, j, k in itertools.product(range(n), range(n), range(r)):
        for jj, m, q in itertools.product(range(n), range(n), range(r)):
            if j != jj:
                continue
            vec = [0] * size
            prod = base.constants[k][q]
            for t, c in enumerate(prod):
                vec[gen(i, m, t)] = c
            constants[gen(i, j, k)][gen(jj, m, q)] = tuple(vec)
    images = []
    for i, j, k in itertools.product(range(n), range(n), range(r)):
        vec = [0] * size
        wk = base.w.images()[k]
        for t, c in enumerate(wk):
            vec[gen(j, i, t)] = c
        images.append(tuple(vec))
    one = [0] * size
    for i in range(n):
        for t, c in enumerate(base.one):
            one[gen(i, i, t)] = c
    w = GroupHom.from_images(group, group, images)
    name = f"M{n}({base})"
    return FinRingInv(group, tuple(tuple(row) for row in constants), tuple(one), w, name)


def group_algebra(
    base: FinRingInv, group: FinGroup, tau: Sequence[int] | None = None
) -> FinRingInv:
    """``R[π]`` with ``w(r·g) = w(r)·τ(g)``; ``τ`` defaults to inversion."""
    tau = tuple(group.inverses if tau is None else tau)
    group.check_anti_involution(tau)
    r = base.additive.rank
    n = group.order
    additive = FinAbGroup(base.additive.orders * n)
    size = additive.rank

    def block(g: int, vec: Element) -> tuple[int, ...]:
        out = [0] * size
        out[g * r:(g + 1) * r] = vec
        return tuple(out)

    constants = []
    for g in range(n):
        for k in range(r):
            row = []
            for h in range(n):
                for q in range(r):
                    row.append(block(group.mul(g, h), base.constants[k][q]))
            constants.append(tuple(row))
    base_w = base.w.images()
    images = [block(tau[g], base_w[k]) for g in range(n) for k in range(r)]
    w = GroupHom.from_images(additive, additive, images)
    one = block(group.identity, base.one)
    return FinRingInv(additive, tuple(constants), one, w, f"{base}[{group}]")


@dataclass(frozen=True)
class RMatrix:
    """Square matrix with entries in a finite ring."""

    ring: FinRingInv
    entries: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("RMatrix must be square")
        entries = tuple(tuple(self.ring.additive.reduce(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, ring: FinRingInv, rows: Sequence[Sequence[Element | int]]) -> RMatrix:
        """Integers are read as multiples of the unit."""
        def entry(x: Element | int) -> Element:
            return ring.scalar(x) if isinstance(x, int) else tuple(x)

        return cls(ring, tuple(tuple(entry(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, ring: FinRingInv, n: int) -> RMatrix:
        return cls.from_rows(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ring: FinRingInv, n: int) -> RMatrix:
        return cls.from_rows(ring, [[0] * n for _ in range(n)])

    @classmethod
    def from_flat(cls, ring: FinRingInv, n: int, flat: Sequence[int]) -> RMatrix:
        r = ring.additive.rank
        return cls(
            ring,
            tuple(
                tuple(tuple(flat[(i * n + j) * r:(i * n + j + 1) * r]) for j in range(n))
                for i in range(n)
            ),
        )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        return self.entries[ij[0]][ij[1]]

    def flat(self) -> Element:
        return tuple(c for row in self.entries for x in row for c in x)

    def __matmul__(self, other: RMatrix) -> RMatrix:
        ring, n = self.ring, self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ring.zero()
                for k in range(n):
                    a = self.entries[i][k]
                    if any(a):
                        acc = ring.add(acc, ring.mul(a, other.entries[k][j]))
                row.append(acc)
            rows.append(tuple(row))
        return RMatrix(ring, tuple(rows))

    def __add__(self, other: RMatrix) -> RMatrix:
        ring = self.ring
        return RMatrix(
            ring,
            tuple(
                tuple(ring.add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def involution(self) -> RMatrix:
        """``w(A)_ij = w(A_ji)``."""
        ring, n = self.ring, self.n
        return RMatrix(
            ring, tuple(tuple(ring.w(self.entries[j][i]) for j in range(n)) for i in range(n))
        )

    def map_entries(self, f, ring: FinRingInv) -> RMatrix:
        return RMatrix(ring, tuple(tuple(f(x) for x in row) for row in self.entries))

    def is_identity(self) -> bool:
        return self == RMatrix.identity(self.ring, self.n)


def _left_multiplication(m: RMatrix) -> GroupHom:
    group = matrix_ring(m.ring, m.n).additive
    return GroupHom.from_function(
        group, group, lambda x: (m @ RMatrix.from_flat(m.ring, m.n, x)).flat()
    )


def invert_matrix(
    m: RMatrix, method: str = "solve", limit: int = EXHAUSTIVE_INVERSE_LIMIT
) -> RMatrix:
    """Two-sided inverse of ``m``.

    ``method="solve"`` solves ``m·X = I`` over the additive group of matrices;
    ``method="exhaustive"`` scans every matrix and needs at most ``limit`` of them.
    """
    ident = RMatrix.identity(m.ring, m.n)
    if method == "exhaustive":
        total = m.ring.size ** (m.n * m.n)
        if total > limit:
            raise TooLarge(f"{total} candidate matrices exceed the exhaustive limit {limit}")
        group = matrix_ring(m.ring, m.n).additive
        for flat in group.elements():
            x = RMatrix.from_flat(m.ring, m.n, flat)
            if m @ x == ident and x @ m == ident:
                return x
        raise NotUnit("matrix is not invertible")
    if method != "solve":
        raise ValueError(f"unknown inversion method {method!r}")
    pre = _left_multiplication(m).preimage(ident.flat())
    if pre is None:
        raise NotUnit("matrix is not invertible")
    x = RMatrix.from_flat(m.ring, m.n, pre)
    if x @ m != ident:
        raise NotUnit("matrix has a right inverse but no left inverse")
    return x


def is_invertible(m: RMatrix) -> bool:
    try:
        invert_matrix(m)
    except NotUnit:
        return False
    return True
