"""Finitely generated abelian groups, homomorphisms, subgroups and cokernels."""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from sympy import Matrix

from exactalg.errors import HermackeyError
from exactalg.snf import (
    IntegerSolver,
    echelon_coordinates,
    hermite_basis,
    integer_kernel,
    invariant_factors,
    smith_normal_form,
)

Element = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """Direct sum of cyclic groups; ``orders[i] == 0`` is an infinite cyclic factor."""

    orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(o) for o in self.orders)
        if any(o < 0 for o in orders):
            raise ValueError(f"cyclic orders must be non-negative, got {orders}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def is_finite(self) -> bool:
        return all(self.orders)

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise HermackeyError(f"{self} is infinite")
        return math.prod(self.orders)

    def zero(self) -> Element:
        return (0,) * self.rank

    def reduce(self, x: Iterable[int]) -> Element:
        x = tuple(int(v) for v in x)
        if len(x) != self.rank:
            raise ValueError(f"element {x} has {len(x)} coordinates, expected {self.rank}")
        return tuple(v % o if o else v for v, o in zip(x, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % o if o else a + b for a, b, o in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % o if o else -a for a, o in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % o if o else a - b for a, b, o in zip(x, y, self.orders))

    def scale(self, k: int, x: Element) -> Element:
        return tuple((k * a) % o if o else k * a for a, o in zip(x, self.orders))

    def sum(self, items: Iterable[Element]) -> Element:
        total = self.zero()
        for item in items:
            total = self.add(total, item)
        return total

    def basis(self) -> list[Element]:
        return [tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank)]

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order of coordinates."""
        if not self.is_finite:
            raise HermackeyError(f"cannot enumerate infinite group {self}")
        return itertools.product(*(range(o) for o in self.orders))

    @cached_property
    def _radix(self) -> tuple[int, ...]:
        weights = []
        acc = 1
        for o in reversed(self.orders):
            weights.append(acc)
            acc *= o
        return tuple(reversed(weights))

    def index(self, x: Element) -> int:
        return sum(v * w for v, w in zip(x, self._radix))

    def element(self, i: int) -> Element:
        return tuple((i // w) % o for w, o in zip(self._radix, self.orders))

    def direct_sum(self, *others: FinAbGroup) -> FinAbGroup:
        orders = list(self.orders)
        for other in others:
            orders.extend(other.orders)
        return FinAbGroup(tuple(orders))

    def invariants(self) -> PresentedGroup:
        return PresentedGroup.from_orders(self.orders)

    def __str__(self) -> str:
        return str(self.invariants())


@dataclass(frozen=True)
class PresentedGroup:
    """An abelian group in invariant-factor form, plus truncation bookkeeping."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    stable: bool | None = None
    truncated: bool = False

    @classmethod
    def from_orders(cls, orders: Sequence[int], **flags) -> PresentedGroup:
        diag = [[o if i == j else 0 for j in range(len(orders))] for i, o in enumerate(orders)]
        factors = invariant_factors(diag, len(orders)) if orders else []
        free = sum(1 for o in orders if o == 0)
        return cls(free_rank=free, torsion=tuple(d for d in factors if d > 1), **flags)

    def same_group(self, other: PresentedGroup) -> bool:
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    @property
    def notation(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def describe(self) -> str:
        if self.truncated:
            return f"{self.notation} (truncated)"
        if self.stable is True:
            return f"{self.notation} (stable)"
        if self.stable is False:
            return f"{self.notation} (unstable)"
        return self.notation

    def __str__(self) -> str:
        return self.notation


@dataclass(frozen=True, eq=False)
class GroupHom:
    """Homomorphism given by an integer matrix acting on coordinate columns."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = [tuple(int(v) for v in row) for row in self.matrix]
        if len(rows) != self.target.rank:
            raise ValueError(f"matrix has {len(rows)} rows, target rank is {self.target.rank}")
        if any(len(row) != self.source.rank for row in rows):
            raise ValueError(f"matrix rows must have {self.source.rank} entries")
        rows = [
            tuple(v % o if o else v for v in row) for row, o in zip(rows, self.target.orders)
        ]
        object.__setattr__(self, "matrix", tuple(rows))

    @classmethod
    def from_images(
        cls, source: FinAbGroup, target: FinAbGroup, images: Sequence[Sequence[int]]
    ) -> GroupHom:
        if len(images) != source.rank:
            raise ValueError(f"need {source.rank} generator images, got {len(images)}")
        matrix = [[images[j][i] for j in range(source.rank)] for i in range(target.rank)]
        return cls(source, target, tuple(tuple(r) for r in matrix))

    @classmethod
    def from_function(
        cls, source: FinAbGroup, target: FinAbGroup, f: Callable[[Element], Sequence[int]]
    ) -> GroupHom:
        return cls.from_images(source, target, [f(e) for e in source.basis()])

    @classmethod
    def identity(cls, group: FinAbGroup) -> GroupHom:
        return cls.from_images(group, group, group.basis())

    @classmethod
    def zero(cls, source: FinAbGroup, target: FinAbGroup) -> GroupHom:
        return cls.from_images(source, target, [target.zero()] * source.rank)

    def __call__(self, x: Sequence[int]) -> Element:
        return self.target.reduce(sum(c * v for c, v in zip(row, x)) for row in self.matrix)

    def images(self) -> list[Element]:
        return [tuple(row[j] for row in self.matrix) for j in range(self.source.rank)]

    def compose(self, first: GroupHom) -> GroupHom:
        """``self ∘ first``."""
        if first.target != self.source:
            raise ValueError("composition of incompatible homomorphisms")
        images = [self(img) for img in first.images()]
        return GroupHom.from_images(first.source, self.target, images)

    def __add__(self, other: GroupHom) -> GroupHom:
        imgs = [self.target.add(a, b) for a, b in zip(self.images(), other.images())]
        return GroupHom.from_images(self.source, self.target, imgs)

    def __neg__(self) -> GroupHom:
        return GroupHom.from_images(
            self.source, self.target, [self.target.neg(a) for a in self.images()]
        )

    def __sub__(self, other: GroupHom) -> GroupHom:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.matrix))

    def ill_defined_generator(self) -> int | None:
        """Index of a finite-order generator whose image violates its relation."""
        for j, (o, img) in enumerate(zip(self.source.orders, self.images())):
            if o and any(self.target.scale(o, img)):
                return j
        return None

    def is_well_defined(self) -> bool:
        return self.ill_defined_generator() is None

    def _combined(self) -> list[list[int]]:
        # [M | D_target]: solutions (x, t) of M x + D t = y
        rows = []
        finite = [i for i, o in enumerate(self.target.orders) if o]
        for i, row in enumerate(self.matrix):
            rel = [self.target.orders[i] if k == i else 0 for k in finite]
            rows.append(list(row) + rel)
        return rows

    @cached_property
    def _solver(self) -> IntegerSolver:
        ncols = self.source.rank + sum(1 for o in self.target.orders if o)
        return IntegerSolver(self._combined(), ncols)

    def preimage(self, y: Sequence[int]) -> Element | None:
        """Some ``x`` with ``self(x) == y``, or ``None``."""
        sol = self._solver.solve(list(self.target.reduce(y)))
        if sol is None:
            return None
        return self.source.reduce(sol[: self.source.rank])

    def kernel(self) -> Subgroup:
        ncols = self.source.rank + sum(1 for o in self.target.orders if o)
        vectors = integer_kernel(self._combined(), ncols)
        return subgroup_generated(self.source, [v[: self.source.rank] for v in vectors])

    def is_injective(self) -> bool:
        return self.kernel().group.size == 1

    def is_bijective(self) -> bool:
        return (
            self.source.is_finite
            and self.target.is_finite
            and self.source.size == self.target.size
            and self.is_injective()
        )


@dataclass(frozen=True, eq=False)
class Subgroup:
    ambient: FinAbGroup
    group: FinAbGroup
    inclusion: GroupHom

    @property
    def size(self) -> int:
        return self.group.size

    def contains(self, x: Sequence[int]) -> bool:
        return self.inclusion.preimage(x) is not None

    def coords(self, x: Sequence[int]) -> Element:
        pre = self.inclusion.preimage(x)
        if pre is None:
            raise ValueError(f"{tuple(x)} is not in the subgroup")
        return pre


def _normalise_sign(group: FinAbGroup, vec: Element) -> Element:
    for v, o in zip(vec, group.orders):
        if v:
            flip = ((-v) % o < v) if o else v < 0
            return group.neg(vec) if flip else vec
    return vec


def _unimodular_inverse(v: Sequence[Sequence[int]]) -> list[list[int]]:
    inv = Matrix(v).inv()
    return [[int(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def subgroup_generated(group: FinAbGroup, generators: Iterable[Sequence[int]]) -> Subgroup:
    """Subgroup generated by ``generators`` with its own invariant-factor coordinates."""
    r = group.rank
    relations = [[o if k == i else 0 for k in range(r)] for i, o in enumerate(group.orders) if o]
    lattice = [list(group.reduce(g)) for g in generators] + relations
    basis = hermite_basis(lattice, r)
    if not basis:
        sub = FinAbGroup(())
        return Subgroup(group, sub, GroupHom.zero(sub, group))
    rel_rows = [echelon_coordinates(basis, rel) for rel in relations]
    k = len(basis)
    s, _, v = smith_normal_form(rel_rows, k)
    v_inv = _unimodular_inverse(v)
    diag = [s[i][i] if i < len(s) else 0 for i in range(k)]
    orders, images = [], []
    for j in range(k):
        if diag[j] == 1:
            continue
        vec = [sum(v_inv[j][t] * basis[t][c] for t in range(k)) for c in range(r)]
        orders.append(diag[j])
        images.append(_normalise_sign(group, group.reduce(vec)))
    sub = FinAbGroup(tuple(orders))
    return Subgroup(group, sub, GroupHom.from_images(sub, group, images))


@dataclass(frozen=True, eq=False)
class Cokernel:
    """``Z^generators / relations`` with maps in and out of the presented group."""

    generators: int
    group: FinAbGroup
    projection: tuple[tuple[int, ...], ...]
    lifts: tuple[tuple[int, ...], ...]

    def image(self, vector: Sequence[int]) -> Element:
        return self.group.reduce(
            sum(vector[i] * self.projection[i][j] for i in range(self.generators))
            for j in range(self.group.rank)
        )

    def generator_image(self, i: int) -> Element:
        return self.group.reduce(self.projection[i])

    def lift(self, j: int) -> tuple[int, ...]:
        """A vector in generator space mapping to the j-th group generator."""
        return self.lifts[j]

    def presented(self, **flags) -> PresentedGroup:
        return PresentedGroup.from_orders(self.group.orders, **flags)


def cokernel(generators: int, relations: Sequence[Sequence[int]]) -> Cokernel:
    rows = [list(r) for r in relations]
    if any(len(r) != generators for r in rows):
        raise ValueError(f"relation rows must have {generators} entries")
    s, _, v = smith_normal_form(rows, generators)
    v_inv = _unimodular_inverse(v) if generators else []
    diag = [s[i][i] if i < len(s) else 0 for i in range(generators)]
    keep = [j for j in range(generators) if diag[j] != 1]
    group = FinAbGroup(tuple(diag[j] for j in keep))
    projection = tuple(tuple(v[i][j] for j in keep) for i in range(generators))
    lifts = tuple(tuple(v_inv[j]) for j in keep)
    return Cokernel(generators, group, projection, lifts)


def abelian_group_from_relations(generators: int, relations: Sequence[Sequence[int]]) -> FinAbGroup:
    """Cokernel of the relation matrix in invariant-factor form."""
    return cokernel(generators, relations).group
