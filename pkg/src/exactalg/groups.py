"""Finite groups given by multiplication tables, and a small catalog."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import DihedralGroup, SymmetricGroup

from exactalg.abelian import PresentedGroup, cokernel
from exactalg.errors import InvalidAntiInvolution, InvalidGroupTable


@dataclass(frozen=True, eq=False)
class FinGroup:
    """A finite group on ``0..order-1``; ``table[g][h]`` is the product ``gh``."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        n = len(table)
        if n == 0:
            raise InvalidGroupTable("a group needs at least one element")
        if any(len(row) != n for row in table):
            raise InvalidGroupTable(f"multiplication table must be {n}x{n}")
        if any(not 0 <= x < n for row in table for x in row):
            raise InvalidGroupTable("table entries must be element indices")
        labels = tuple(str(s) for s in self.labels) if self.labels else tuple(map(str, range(n)))
        if len(labels) != n or len(set(labels)) != n:
            raise InvalidGroupTable("labels must be distinct, one per element")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", labels)
        _validate_group(table)

    @classmethod
    def from_table(
        cls, table: Sequence[Sequence[int]], labels: Sequence[str] = (), name: str = ""
    ) -> FinGroup:
        return cls(tuple(tuple(r) for r in table), tuple(labels), name)

    @classmethod
    def from_rule(
        cls,
        elements: Sequence[Hashable],
        op: Callable[[Hashable, Hashable], Hashable],
        labels: Sequence[str],
        name: str = "",
    ) -> FinGroup:
        where = {x: i for i, x in enumerate(elements)}
        table = [[where[op(a, b)] for b in elements] for a in elements]
        return cls.from_table(table, labels, name)

    @classmethod
    def from_permutation_group(cls, group: PermutationGroup, name: str = "") -> FinGroup:
        perms = sorted(group.elements, key=lambda p: (len(p.support()), p.cyclic_form))
        where = {tuple(p.array_form): i for i, p in enumerate(perms)}
        table = [[where[tuple((q * p).array_form)] for q in perms] for p in perms]
        # sympy composes left to right; (q * p) applies p after q, so row p, column q is p∘q
        return cls.from_table(table, [_cycle_label(p) for p in perms], name)

    @classmethod
    def from_permutations(cls, generators: Sequence[Sequence[int]], name: str = "") -> FinGroup:
        """Group generated by permutations in 0-based array form."""
        degree = max(len(g) for g in generators)
        perms = [Permutation(list(g), size=degree) for g in generators]
        return cls.from_permutation_group(PermutationGroup(perms), name)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    @cached_property
    def identity(self) -> int:
        n = self.order
        return next(e for e in range(n) if all(self.table[e][g] == g for g in range(n)))

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(
            next(h for h in range(self.order) if self.table[g][h] == e) for g in range(self.order)
        )

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def label(self, g: int) -> str:
        return self.labels[g]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of {self.name or 'the group'}") from None

    def is_abelian(self) -> bool:
        return all(
            self.table[g][h] == self.table[h][g] for g in range(self.order) for h in range(g)
        )

    def check_anti_involution(self, tau: Sequence[int]) -> None:
        """Raise unless ``tau`` squares to the identity and reverses products."""
        n = self.order
        if len(tau) != n or sorted(tau) != list(range(n)):
            raise InvalidAntiInvolution("anti-involution must be a permutation of the elements")
        for g in range(n):
            if tau[tau[g]] != g:
                raise InvalidAntiInvolution(f"tau(tau({self.labels[g]})) != {self.labels[g]}")
            for h in range(n):
                if tau[self.table[g][h]] != self.table[tau[h]][tau[g]]:
                    raise InvalidAntiInvolution(
                        f"tau({self.labels[g]}*{self.labels[h]}) != "
                        f"tau({self.labels[h]})*tau({self.labels[g]})"
                    )

    def subgroup(self, members: Sequence[int], name: str = "") -> FinGroup:
        members = sorted(set(members))
        where = {g: i for i, g in enumerate(members)}
        try:
            table = [[where[self.table[g][h]] for h in members] for g in members]
        except KeyError:
            raise InvalidGroupTable("members are not closed under multiplication") from None
        return FinGroup.from_table(table, [self.labels[g] for g in members], name)

    def conjugacy_class(self, g: int) -> list[int]:
        return sorted({self.table[self.table[x][g]][self.inv(x)] for x in range(self.order)})

    def conjugacy_classes(self) -> list[list[int]]:
        seen: set[int] = set()
        classes = []
        for g in range(self.order):
            if g not in seen:
                cls = self.conjugacy_class(g)
                seen.update(cls)
                classes.append(cls)
        return classes

    def centralizer(self, g: int) -> list[int]:
        return [x for x in range(self.order) if self.table[x][g] == self.table[g][x]]

    def abelianization(self) -> PresentedGroup:
        """``G/[G,G]`` from the presentation ``e_g + e_h = e_{gh}``."""
        n = self.order
        relations = []
        for g in range(n):
            for h in range(n):
                row = [0] * n
                row[g] += 1
                row[h] += 1
                row[self.table[g][h]] -= 1
                relations.append(row)
        return cokernel(n, relations).presented()

    def __str__(self) -> str:
        return self.name or f"group of order {self.order}"


def _validate_group(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    identities = [
        e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))
    ]
    if not identities:
        raise InvalidGroupTable("table has no identity element")
    e = identities[0]
    for g in range(n):
        if not any(table[g][h] == e and table[h][g] == e for h in range(n)):
            raise InvalidGroupTable(f"element {g} has no inverse")
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_b = table[b]
            for c in range(n):
                if table[ab][c] != row_a[row_b[c]]:
                    raise InvalidGroupTable(f"associativity fails at ({a}, {b}, {c})")


def _cycle_label(p: Permutation) -> str:
    cycles = p.cyclic_form
    if not cycles:
        return "e"
    sep = "" if p.size <= 9 else " "
    return "".join("(" + sep.join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


@lru_cache(maxsize=None)
def cyclic(n: int) -> FinGroup:
    labels = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FinGroup.from_table(table, labels[:n], f"C{n}")


@lru_cache(maxsize=None)
def symmetric(n: int) -> FinGroup:
    return FinGroup.from_permutation_group(SymmetricGroup(n), f"S{n}")


@lru_cache(maxsize=None)
def dihedral(n: int) -> FinGroup:
    """Symmetry group of the n-gon, of order 2n."""
    return FinGroup.from_permutation_group(DihedralGroup(n), f"D{n}")


_QUATERNION_UNITS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


@lru_cache(maxsize=None)
def quaternion() -> FinGroup:
    elements = [(s, u) for u in ("1", "i", "j", "k") for s in (1, -1)]

    def op(x, y):
        sign, unit = _QUATERNION_UNITS[(x[1], y[1])]
        return (x[0] * y[0] * sign, unit)

    labels = [("" if s == 1 else "-") + u for s, u in elements]
    return FinGroup.from_rule(elements, op, labels, "Q8")


def catalog_groups() -> dict[str, FinGroup]:
    return {
        "C1": cyclic(1),
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C4": cyclic(4),
        "S3": symmetric(3),
        "D4": dihedral(4),
        "Q8": quaternion(),
    }
