"""Isomorphism classes of Hermitian forms: orbits of GLₙ(L(ℤ/2)) on Mₙ(L)(∗).

Every element of the fixed level is indexed in mixed radix (first coordinate
most significant), so index order is lexicographic order and the first index
reached in an orbit is its lexicographically smallest element.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from constructions.matrix import matrix_mackey
from exactalg import Element, FinAbGroup, FinRingInv, GroupHom, RMatrix, is_invertible, matrix_ring
from exactalg.errors import NotAForm, TooLarge
from hermforms.forms import HermForm, is_form
from mackey.functors import HermMackey

logger = logging.getLogger("hermackey.forms")

MAX_ELEMENTS = 2 * 10**7
MAX_GROUP = 10**5
CHUNK = 1 << 16


class MixedRadix:
    """Vectorised conversion between element indices and coordinate arrays."""

    def __init__(self, group: FinAbGroup):
        if not group.is_finite:
            raise ValueError(f"{group} is infinite")
        self.group = group
        self.orders = np.array(group.orders, dtype=np.int64)
        radix = np.ones(len(group.orders), dtype=np.int64)
        for k in range(len(group.orders) - 2, -1, -1):
            radix[k] = radix[k + 1] * self.orders[k + 1]
        self.radix = radix
        self.size = group.size

    def decode(self, idx: np.ndarray) -> np.ndarray:
        """Shape ``(len(idx), rank)``."""
        if not len(self.orders):
            return np.zeros((len(idx), 0), dtype=np.int64)
        return (idx[:, None] // self.radix[None, :]) % self.orders[None, :]

    def encode(self, digits: np.ndarray) -> np.ndarray:
        if not len(self.orders):
            return np.zeros(len(digits), dtype=np.int64)
        return digits @ self.radix


def apply_hom(hom: GroupHom, source: MixedRadix, target: MixedRadix, idx: np.ndarray) -> np.ndarray:
    """Indices of ``hom`` applied to the elements with indices ``idx``."""
    digits = source.decode(idx)
    matrix = np.array(hom.matrix, dtype=np.int64).reshape(hom.target.rank, hom.source.rank)
    image = (digits @ matrix.T) % target.orders[None, :] if len(target.orders) else digits[:, :0]
    return target.encode(image)


def _sparse_moves(matrix: Sequence[Sequence[int]]) -> list[tuple[int, list[tuple[int, int]]]]:
    """Rows of an endomorphism matrix that differ from the identity."""
    moves = []
    for k, row in enumerate(matrix):
        if any(v != (1 if j == k else 0) for j, v in enumerate(row)):
            moves.append((k, [(j, v) for j, v in enumerate(row) if v]))
    return moves


def orbit_partition(
    group: FinAbGroup, generators: Sequence[GroupHom]
) -> tuple[np.ndarray, list[int], list[int]]:
    """Orbits of the group generated by automorphisms ``generators`` of a finite group.

    Returns the orbit label of each element index, and for each orbit its
    smallest index and its size.
    """
    radix = MixedRadix(group)
    ops = [m for m in (_sparse_moves(g.matrix) for g in generators) if m]
    labels = np.full(radix.size, -1, dtype=np.int32)
    reps: list[int] = []
    sizes: list[int] = []
    cursor = 0
    while True:
        start = -1
        while cursor < radix.size:
            free = np.flatnonzero(labels[cursor:cursor + CHUNK] < 0)
            if free.size:
                start = cursor + int(free[0])
                break
            cursor += CHUNK
        if start < 0:
            break
        oid = len(reps)
        labels[start] = oid
        frontier = np.array([start], dtype=np.int64)
        size = 1
        while frontier.size:
            digits = radix.decode(frontier)
            found = []
            for op in ops:
                target = frontier.copy()
                for k, terms in op:
                    value = np.zeros(frontier.size, dtype=np.int64)
                    for j, c in terms:
                        value += c * digits[:, j]
                    value %= radix.orders[k]
                    target += (value - digits[:, k]) * radix.radix[k]
                fresh = np.unique(target[labels[target] < 0])
                if fresh.size:
                    labels[fresh] = oid
                    found.append(fresh)
            frontier = np.concatenate(found) if found else np.empty(0, dtype=np.int64)
            size += frontier.size
        reps.append(start)
        sizes.append(size)
    return labels, reps, sizes


def _elementary(ring: FinRingInv, n: int, i: int, j: int, r: Element) -> RMatrix:
    rows: list[list[Element | int]] = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[i][j] = r
    return RMatrix.from_rows(ring, rows)


def gl_generators(ring: FinRingInv, n: int) -> list[RMatrix]:
    """Generators of GLₙ over a finite ring.

    Finite rings have stable rank one, so GLₙ is generated by elementary
    matrices and ``diag(u, 1, …, 1)``; adjacent elementary matrices with
    entries in an additive basis plus 1 already generate the elementary group.
    """
    gens = []
    entries = list(dict.fromkeys([*ring.additive.basis(), ring.one]))
    for i in range(n - 1):
        for r in entries:
            gens.append(_elementary(ring, n, i, i + 1, r))
            gens.append(_elementary(ring, n, i + 1, i, r))
    for u in ring.unit_group_generators():
        rows: list[list[Element | int]] = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        rows[0][0] = u
        gens.append(RMatrix.from_rows(ring, rows))
    return gens


def gl_elements(ring: FinRingInv, n: int, limit: int = MAX_GROUP) -> list[RMatrix]:
    """Every invertible n×n matrix; for small rings only."""
    total = ring.size ** (n * n)
    if total > limit:
        raise TooLarge(f"{total} candidate matrices exceed the limit {limit}")
    group = matrix_ring(ring, n).additive
    candidates = (RMatrix.from_flat(ring, n, flat) for flat in group.elements())
    return [m for m in candidates if is_invertible(m)]


@dataclass(frozen=True)
class IsoClass:
    representative: HermForm
    size: int
    orbit: int


@dataclass(eq=False)
class Classification:
    base: HermMackey
    n: int
    classes: list[IsoClass]
    labels: np.ndarray
    orbit_class: dict[int, int]
    method: str = "generators"
    radix: MixedRadix = field(init=False)

    def __post_init__(self):
        self.radix = MixedRadix(matrix_mackey(self.base, self.n).fix)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[IsoClass]:
        return iter(self.classes)

    @property
    def total_forms(self) -> int:
        return sum(c.size for c in self.classes)

    def class_index(self, element: Sequence[int]) -> int:
        group = self.radix.group
        orbit = int(self.labels[group.index(group.reduce(element))])
        try:
            return self.orbit_class[orbit]
        except KeyError:
            raise NotAForm(f"{tuple(element)} is not a form of dimension {self.n}") from None

    def class_of(self, form: HermForm) -> IsoClass:
        return self.classes[self.class_index(form.element)]

    def members(self, position: int) -> np.ndarray:
        return np.flatnonzero(self.labels == self.classes[position].orbit)


def enumerate_iso_classes(
    h: HermMackey,
    n: int,
    method: str = "generators",
    max_elements: int = MAX_ELEMENTS,
    max_group: int = MAX_GROUP,
) -> Classification:
    """Orbit decomposition of the n-dimensional forms under ``B ↦ w(λ)·B``.

    ``method="generators"`` runs the orbit search with a generating set of
    GLₙ; ``method="exhaustive"`` with every invertible matrix.
    """
    size = matrix_mackey(h, n).fix.size
    if size > max_elements:
        raise TooLarge(f"M{n}({h}) has {size} fixed elements, above the limit {max_elements}")
    if method not in ("generators", "exhaustive"):
        raise ValueError(f"unknown classification method {method!r}")
    return _classify(h, n, method, max_group)


@lru_cache(maxsize=None)
def _classify(h: HermMackey, n: int, method: str, max_group: int) -> Classification:
    mackey = matrix_mackey(h, n)
    if method == "exhaustive":
        matrices = gl_elements(h.ring, n, max_group)
    else:
        matrices = gl_generators(h.ring, n)
    homs = [mackey.act_hom(m.flat()) for m in matrices]
    logger.debug(
        "classifying %d-dimensional forms over %s: %d elements, %d acting matrices",
        n, h, mackey.fix.size, len(homs),
    )
    labels, reps, sizes = orbit_partition(mackey.fix, homs)
    classes = []
    orbit_class = {}
    for oid, (rep, count) in enumerate(zip(reps, sizes)):
        element = mackey.fix.element(rep)
        if not is_form(h, n, element):
            continue
        orbit_class[oid] = len(classes)
        classes.append(IsoClass(HermForm(h, n, element), count, oid))
    logger.debug("%d orbits, %d of them forms", len(reps), len(classes))
    return Classification(h, n, classes, labels, orbit_class, method)
