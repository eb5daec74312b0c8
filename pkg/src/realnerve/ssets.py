"""Truncated semi-simplicial sets, involutions, edgewise subdivision and fixed points."""

from __future__ import annotations

import itertools
import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

from exactalg import CheckReport
from exactalg.errors import TooLarge, TruncationTooShallow

logger = logging.getLogger("hermackey.nerve")

MAX_SIMPLICES = 2 * 10**5

Simplex = tuple[int, ...]


def involute_morphism(alpha: tuple[int, ...], k: int) -> tuple[int, ...]:
    """``ᾱ(i) = k - α(n - i)`` for an injective monotone ``α: [n] → [k]`` given by values."""
    n = len(alpha) - 1
    monotone = all(a < b for a, b in zip(alpha, alpha[1:]))
    if not monotone or (alpha and not 0 <= alpha[0] <= alpha[-1] <= k):
        raise ValueError(f"{alpha} is not an injective monotone map into [{k}]")
    return tuple(k - alpha[n - i] for i in range(n + 1))


def coface(n: int, i: int) -> tuple[int, ...]:
    """``d^i: [n-1] → [n]``, skipping i."""
    return tuple(j if j < i else j + 1 for j in range(n))


class SemiSimplicialSet(ABC):
    """Levels ``0..truncation`` of a semi-simplicial set with finite, ordered level sets."""

    name: str = ""

    def __init__(self, truncation: int, max_simplices: int = MAX_SIMPLICES):
        if truncation < 0:
            raise TruncationTooShallow(f"truncation must be non-negative, got {truncation}")
        self.truncation = truncation
        self.max_simplices = max_simplices
        self._levels: dict[int, list[Simplex]] = {}
        self._index: dict[int, dict[Simplex, int]] = {}

    @abstractmethod
    def level_size(self, p: int) -> int: ...

    @abstractmethod
    def generate(self, p: int) -> Iterable[Simplex]: ...

    @abstractmethod
    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        """``d_i`` from level p to level p - 1."""

    def _check_level(self, p: int) -> None:
        if not 0 <= p <= self.truncation:
            raise TruncationTooShallow(
                f"{self} is truncated at level {self.truncation}, asked for {p}"
            )

    def simplices(self, p: int) -> list[Simplex]:
        self._check_level(p)
        if p not in self._levels:
            count = self.level_size(p)
            if count > self.max_simplices:
                raise TooLarge(
                    f"{self} has {count} simplices in level {p}, limit {self.max_simplices}"
                )
            self._levels[p] = list(self.generate(p))
            logger.debug("%s: level %d has %d simplices", self, p, len(self._levels[p]))
        return self._levels[p]

    def index(self, p: int) -> dict[Simplex, int]:
        if p not in self._index:
            self._index[p] = {x: k for k, x in enumerate(self.simplices(p))}
        return self._index[p]

    def iterated_face(self, p: int, faces: Iterable[int], x: Simplex) -> Simplex:
        for i in faces:
            x = self.face(p, i, x)
            p -= 1
        return x

    def vertex(self, p: int, x: Simplex) -> Simplex:
        """The last vertex, reached by repeated top faces."""
        return self.iterated_face(p, range(p, 0, -1), x)

    def check_face_identities(self, top: int | None = None) -> CheckReport:
        """``d_i d_j = d_{j-1} d_i`` for ``i < j``."""
        top = self.truncation if top is None else min(top, self.truncation)
        report = CheckReport(f"semi-simplicial identities of {self}")
        for p in range(2, top + 1):
            def problem(x, p=p):
                for j in range(p + 1):
                    dj = self.face(p, j, x)
                    for i in range(j):
                        if self.face(p - 1, i, dj) != self.face(p - 1, j - 1, self.face(p, i, x)):
                            return f"level {p}, x={x}: d{i}d{j} ≠ d{j - 1}d{i}"
                return None

            report.verify(f"level {p}", self.simplices(p), problem)
        return report

    def __str__(self) -> str:
        return self.name or type(self).__name__


class InvolutiveSSet(SemiSimplicialSet):
    """A semi-simplicial set with a levelwise involution.

    ``simplicial_involution`` distinguishes ``w d_i = d_i w`` from the real
    condition ``w d_i = d_{p-i} w``.
    """

    simplicial_involution: bool = True

    @abstractmethod
    def involution(self, p: int, x: Simplex) -> Simplex: ...

    def partner_face(self, p: int, i: int) -> int:
        return i if self.simplicial_involution else p - i

    def check_involution(self, top: int | None = None) -> CheckReport:
        top = self.truncation if top is None else min(top, self.truncation)
        kind = "simplicial" if self.simplicial_involution else "real"
        report = CheckReport(f"{kind} involution of {self}")
        for p in range(top + 1):
            def problem(x, p=p):
                wx = self.involution(p, x)
                if self.involution(p, wx) != x:
                    return f"level {p}: w(w({x})) ≠ {x}"
                for i in range(p + 1 if p else 0):
                    left = self.involution(p - 1, self.face(p, i, x))
                    right = self.face(p, self.partner_face(p, i), wx)
                    if left != right:
                        return f"level {p}, x={x}: w∘d{i} ≠ d{self.partner_face(p, i)}∘w"
                return None

            report.verify(f"level {p}", self.simplices(p), problem)
        return report


class EdgewiseSubdivision(InvolutiveSSet):
    """``sd_e X``: level p is ``X_{2p+1}``, ``d_i`` acts as ``d_i ∘ d_{2p+1-i}`` of X."""

    simplicial_involution = True

    def __init__(self, base: InvolutiveSSet, max_simplices: int = MAX_SIMPLICES):
        if base.simplicial_involution:
            raise ValueError("edgewise subdivision needs a real semi-simplicial set")
        if base.truncation < 1:
            raise TruncationTooShallow(f"{base} must reach level 1 to be subdivided")
        super().__init__((base.truncation - 1) // 2, max_simplices)
        self.base = base
        self.name = f"sd_e {base}"

    def level_size(self, p: int) -> int:
        return self.base.level_size(2 * p + 1)

    def generate(self, p: int) -> Iterable[Simplex]:
        return self.base.simplices(2 * p + 1)

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        n = 2 * p + 1
        return self.base.face(n - 1, i, self.base.face(n, n - i, x))

    def involution(self, p: int, x: Simplex) -> Simplex:
        return self.base.involution(2 * p + 1, x)

    def fixed_level(self, p: int) -> list[Simplex] | None:
        """Fixed simplices when the base can list them directly."""
        direct = getattr(self.base, "fixed_subdivided", None)
        return None if direct is None else direct(p)

    def fixed_level_size(self, p: int) -> int | None:
        direct = getattr(self.base, "fixed_subdivided_size", None)
        return None if direct is None else direct(p)


class FixedSimplices(SemiSimplicialSet):
    """Levelwise fixed points of a simplicial involution, with restricted faces."""

    def __init__(self, parent: InvolutiveSSet):
        if not parent.simplicial_involution:
            raise ValueError("fixed points need a simplicial involution")
        super().__init__(parent.truncation, parent.max_simplices)
        self.parent = parent
        self.name = f"({parent})^Z/2"

    def level_size(self, p: int) -> int:
        direct = getattr(self.parent, "fixed_level_size", None)
        size = direct(p) if direct is not None else None
        return self.parent.level_size(p) if size is None else size

    def generate(self, p: int) -> Iterable[Simplex]:
        direct = getattr(self.parent, "fixed_level", None)
        listed = direct(p) if direct is not None else None
        if listed is not None:
            return sorted(listed)
        return self.filtered(p)

    def filtered(self, p: int) -> list[Simplex]:
        return [x for x in self.parent.simplices(p) if self.parent.involution(p, x) == x]

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        return self.parent.face(p, i, x)

    def check_listing(self, top: int | None = None) -> CheckReport:
        """Each level must be exactly the simplices the parent's involution fixes."""
        top = self.truncation if top is None else min(top, self.truncation)
        report = CheckReport(f"fixed simplices of {self.parent}")
        for p in range(top + 1):
            listed = self.simplices(p)
            filtered = self.filtered(p)
            extra = sorted(set(listed) - set(filtered))
            missing = sorted(set(filtered) - set(listed))
            witness = None
            if extra:
                witness = f"level {p}: {extra[0]} is listed but not fixed"
            elif missing:
                witness = f"level {p}: {missing[0]} is fixed but not listed"
            elif len(listed) != len(filtered):
                witness = f"level {p}: {len(listed)} listed, {len(filtered)} fixed"
            report.add(f"level {p} fixed listing", witness is None, len(filtered), witness)
        return report


def fixed_simplices(y: InvolutiveSSet) -> FixedSimplices:
    return FixedSimplices(y)


class SimplicialMap:
    """Levelwise map ``f_p: X_p → Y_p`` up to the common truncation."""

    def __init__(
        self,
        source: SemiSimplicialSet,
        target: SemiSimplicialSet,
        func: Callable[[int, Simplex], Simplex],
        name: str = "",
    ):
        self.source = source
        self.target = target
        self.func = func
        self.name = name
        self.truncation = min(source.truncation, target.truncation)

    def __call__(self, p: int, x: Simplex) -> Simplex:
        return self.func(p, x)

    def compose(self, first: SimplicialMap) -> SimplicialMap:
        """``self ∘ first``."""
        return SimplicialMap(
            first.source, self.target, lambda p, x: self(p, first(p, x)), f"{self}∘{first}"
        )

    def check_simplicial(self, top: int | None = None) -> CheckReport:
        top = self.truncation if top is None else min(top, self.truncation)
        report = CheckReport(f"simplicial map {self}")
        for p in range(top + 1):
            targets = self.target.index(p)

            def problem(x, p=p):
                fx = self(p, x)
                if fx not in targets:
                    return f"level {p}: f({x}) = {fx} is not a simplex of {self.target}"
                for i in range(p + 1 if p else 0):
                    if self(p - 1, self.source.face(p, i, x)) != self.target.face(p, i, fx):
                        return f"level {p}, x={x}: f∘d{i} ≠ d{i}∘f"
                return None

            report.verify(f"level {p}", self.source.simplices(p), problem)
        return report

    def check_equivariant(self, top: int | None = None) -> CheckReport:
        top = self.truncation if top is None else min(top, self.truncation)
        report = CheckReport(f"equivariance of {self}")
        src, tgt = self.source, self.target
        for p in range(top + 1):
            def problem(x, p=p):
                left = self(p, src.involution(p, x))
                right = tgt.involution(p, self(p, x))
                return None if left == right else f"level {p}, x={x}: {left} ≠ {right}"

            report.verify(f"level {p}", src.simplices(p), problem)
        return report

    def is_levelwise_bijective(self, top: int | None = None) -> bool:
        top = self.truncation if top is None else min(top, self.truncation)
        for p in range(top + 1):
            images = {self(p, x) for x in self.source.simplices(p)}
            if len(images) != len(self.source.simplices(p)):
                return False
            if images != set(self.target.simplices(p)):
                return False
        return True

    def __str__(self) -> str:
        return self.name or "f"


def identity_map(x: SemiSimplicialSet) -> SimplicialMap:
    return SimplicialMap(x, x, lambda p, s: s, f"id({x})")


def first_half_map(y: EdgewiseSubdivision) -> SimplicialMap:
    """``sd_e X → X``, restriction to the first copy of ``[p]`` in ``[p] ⨿ [p]^op``."""
    base = y.base

    def func(p: int, x: Simplex) -> Simplex:
        n = 2 * p + 1
        return base.iterated_face(n, range(n, p, -1), x)

    mapped = SimplicialMap(y, base, func, f"first half of {y}")
    mapped.truncation = y.truncation
    return mapped


def fixed_inclusion(f: FixedSimplices) -> SimplicialMap:
    return SimplicialMap(f, f.parent, lambda p, x: x, f"inclusion of {f}")


class ComponentSSet(SemiSimplicialSet):
    """The simplices of X whose last vertex lies in a given set of vertices."""

    def __init__(self, parent: SemiSimplicialSet, vertices: Iterable[Simplex], name: str = ""):
        super().__init__(parent.truncation, parent.max_simplices)
        self.parent = parent
        self.vertices = frozenset(vertices)
        self.name = name or f"component of {parent}"

    def level_size(self, p: int) -> int:
        return self.parent.level_size(p)

    def generate(self, p: int) -> Iterable[Simplex]:
        return [x for x in self.parent.simplices(p) if self.parent.vertex(p, x) in self.vertices]

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        return self.parent.face(p, i, x)


def connected_components(x: SemiSimplicialSet) -> list[list[Simplex]]:
    """Vertex sets of the components, ordered by their first vertex."""
    vertices = x.simplices(0)
    n = len(vertices)
    if x.truncation < 1 or n == 0:
        return [[v] for v in vertices]
    idx = x.index(0)
    edges = x.simplices(1)
    rows = np.array([idx[x.face(1, 0, e)] for e in edges], dtype=np.int64)
    cols = np.array([idx[x.face(1, 1, e)] for e in edges], dtype=np.int64)
    graph = coo_matrix((np.ones(len(edges)), (rows, cols)), shape=(n, n))
    count, labels = _csgraph_components(graph, directed=False)
    groups: dict[int, list[Simplex]] = {}
    for v, lab in zip(vertices, labels):
        groups.setdefault(int(lab), []).append(v)
    ordered = sorted(groups.values(), key=lambda vs: idx[vs[0]])
    logger.debug("%s: %d components", x, count)
    return ordered


def component_sset(x: SemiSimplicialSet, vertex: Simplex) -> ComponentSSet:
    for comp in connected_components(x):
        if vertex in comp:
            return ComponentSSet(x, comp, f"component of {vertex} in {x}")
    raise KeyError(f"{vertex} is not a vertex of {x}")


def product_level(size: int, length: int) -> Iterable[Simplex]:
    return itertools.product(range(size), repeat=length)
