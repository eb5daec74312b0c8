"""Finite monoids with anti-involution."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from exactalg import FinGroup
from exactalg.errors import InvalidAntiInvolution, InvalidGroupTable


@dataclass(frozen=True, eq=False)
class MonoidAI:
    """A finite (possibly non-unital) monoid on ``0..size-1`` with ``w(mn) = w(n)w(m)``."""

    table: tuple[tuple[int, ...], ...]
    w: tuple[int, ...]
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise InvalidGroupTable("monoid table must be square and non-empty")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(map(str, range(n))))
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise InvalidGroupTable(f"associativity fails at ({a}, {b}, {c})")
        if len(self.w) != n:
            raise InvalidAntiInvolution("involution needs one image per element")
        for a in range(n):
            if self.w[self.w[a]] != a:
                raise InvalidAntiInvolution(f"w(w({self.labels[a]})) != {self.labels[a]}")
            for b in range(n):
                if self.w[self.table[a][b]] != self.table[self.w[b]][self.w[a]]:
                    raise InvalidAntiInvolution(
                        f"w({self.labels[a]}{self.labels[b]}) != "
                        f"w({self.labels[b]})w({self.labels[a]})"
                    )

    @classmethod
    def from_group(cls, group: FinGroup, tau: Sequence[int] | None = None) -> MonoidAI:
        """A group with inversion, or with the anti-involution ``tau``."""
        w = tuple(group.inverses if tau is None else tau)
        return cls(group.table, w, group.labels, group.name)

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, *factors: int) -> int:
        out = factors[0]
        for f in factors[1:]:
            out = self.table[out][f]
        return out

    @cached_property
    def unit(self) -> int | None:
        n = self.size
        for e in range(n):
            if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n)):
                return e
        return None

    @cached_property
    def fixed(self) -> tuple[int, ...]:
        """Elements with ``w(m) = m``."""
        return tuple(m for m in range(self.size) if self.w[m] == m)

    def label(self, m: int) -> str:
        return self.labels[m]

    def __str__(self) -> str:
        return self.name or f"monoid of order {self.size}"
