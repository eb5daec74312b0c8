"""KH₀ as a truncated Grothendieck group of forms, the Witt group W₀, and induced maps."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from constructions.comparison import matrix_of_morphism
from exactalg import Cokernel, Element, FinAbGroup, GroupHom, PresentedGroup, cokernel
from exactalg.errors import NotWellDefined, TruncationTooShallow
from hermforms.classify import (
    MAX_ELEMENTS,
    Classification,
    IsoClass,
    MixedRadix,
    apply_hom,
    enumerate_iso_classes,
)
from hermforms.forms import HermForm, block_sum, hyperbolic, negate_form, unit_form
from mackey.functors import HermMackey
from mackey.morphisms import HermMorphism

logger = logging.getLogger("hermackey.forms")


@dataclass(eq=False)
class KH0Result:
    """Generators are the iso classes of dimension ``1..dim_bound`` in dimension order."""

    base: HermMackey
    dim_bound: int
    classifications: dict[int, Classification]
    relations: list[list[int]]
    presentation: Cokernel
    group: PresentedGroup
    offsets: dict[int, int] = field(default_factory=dict)

    @property
    def generator_count(self) -> int:
        return self.presentation.generators

    def generator(self, form: HermForm) -> int:
        if form.base is not self.base or form.n > self.dim_bound:
            raise ValueError(f"{form} is outside this computation")
        return self.offsets[form.n] + self.classifications[form.n].class_index(form.element)

    def generators(self) -> list[tuple[int, IsoClass]]:
        return [(n, c) for n in sorted(self.classifications) for c in self.classifications[n]]

    def element_of(self, form: HermForm) -> Element:
        vec = [0] * self.generator_count
        vec[self.generator(form)] = 1
        return self.presentation.image(vec)

    def dimension(self, index: int) -> int:
        return max(n for n, off in self.offsets.items() if off <= index)

    @property
    def hyperbolic_class(self) -> Element | None:
        if self.dim_bound < 2:
            return None
        return self.element_of(hyperbolic(self.base, 1))

    @property
    def unit_class(self) -> Element | None:
        if self.base.fix_unit is None:
            return None
        return self.element_of(unit_form(self.base, 1))


def _zero_ring(h: HermMackey) -> bool:
    return h.ring.one == h.ring.zero()


def _presentation(h: HermMackey, dim_bound: int, max_elements: int) -> KH0Result:
    classifications = {
        n: enumerate_iso_classes(h, n, max_elements=max_elements) for n in range(1, dim_bound + 1)
    }
    offsets = {}
    total = 0
    for n in range(1, dim_bound + 1):
        offsets[n] = total
        total += len(classifications[n])
    relations: list[list[int]] = []
    for a in range(1, dim_bound + 1):
        for b in range(a, dim_bound + 1 - a):
            for i, ci in enumerate(classifications[a]):
                for j, cj in enumerate(classifications[b]):
                    if a == b and j < i:
                        continue
                    s = block_sum(ci.representative, cj.representative)
                    row = [0] * total
                    row[offsets[a] + i] += 1
                    row[offsets[b] + j] += 1
                    row[offsets[a + b] + classifications[a + b].class_index(s.element)] -= 1
                    relations.append(row)
    if _zero_ring(h):
        # over the zero ring all dimensions describe the zero module
        for k in range(total):
            relations.append([1 if t == k else 0 for t in range(total)])
    logger.debug("KH0(%s, D=%d): %d generators, %d relations", h, dim_bound, total, len(relations))
    pres = cokernel(total, relations)
    group = pres.presented()
    return KH0Result(h, dim_bound, classifications, relations, pres, group, offsets)


@lru_cache(maxsize=None)
def _kh0(h: HermMackey, dim_bound: int, max_elements: int) -> KH0Result:
    result = _presentation(h, dim_bound, max_elements)
    if dim_bound == 1:
        result.group = PresentedGroup.from_orders(result.presentation.group.orders, truncated=True)
        logger.warning("KH0(%s) at dimension bound 1 is truncated", h)
        return result
    previous = _kh0(h, dim_bound - 1, max_elements)
    stable = result.group.same_group(previous.group)
    result.group = PresentedGroup.from_orders(result.presentation.group.orders, stable=stable)
    if not stable:
        logger.warning("KH0(%s) changes between bounds %d and %d", h, dim_bound - 1, dim_bound)
    return result


def kh0(h: HermMackey, dim_bound: int, max_elements: int = MAX_ELEMENTS) -> KH0Result:
    """Grothendieck group of forms of dimension ≤ D with ``[B] + [B'] = [B⊕B']``.

    Flagged stable when the group agrees with the one at bound D−1.
    """
    if dim_bound < 1:
        raise TruncationTooShallow("the dimension bound must be at least 1")
    return _kh0(h, dim_bound, max_elements)


@dataclass(eq=False)
class WittResult:
    kh0: KH0Result
    presentation: Cokernel
    group: PresentedGroup


def witt0(h: HermMackey, dim_bound: int, max_elements: int = MAX_ELEMENTS) -> WittResult:
    """Cokernel of ``ℤ → KH₀``, ``1 ↦ [hyperbolic(1)]``."""
    k = kh0(h, dim_bound, max_elements)
    if dim_bound < 2:
        group = PresentedGroup.from_orders(k.presentation.group.orders, truncated=True)
        return WittResult(k, k.presentation, group)
    row = [0] * k.generator_count
    row[k.generator(hyperbolic(h, 1))] = 1
    pres = cokernel(k.generator_count, k.relations + [row])
    stable = bool(k.group.stable)
    if dim_bound > 2 and stable:
        stable = witt0(h, dim_bound - 1, max_elements).group.same_group(pres.presented())
    return WittResult(k, pres, pres.presented(stable=stable))


def _induced_hom(
    source: KH0Result, target: KH0Result, image_of: Callable[[int], list[int]]
) -> GroupHom:
    """Homomorphism of presented groups from the images of generator classes."""
    images = [image_of(i) for i in range(source.generator_count)]
    for row in source.relations:
        total = [0] * target.generator_count
        for i, c in enumerate(row):
            if c:
                total = [t + c * v for t, v in zip(total, images[i])]
        if any(target.presentation.image(total)):
            raise NotWellDefined("a relation does not map to zero", witness=str(row))
    columns = []
    for j in range(source.presentation.group.rank):
        lift = source.presentation.lift(j)
        total = [0] * target.generator_count
        for i, c in enumerate(lift):
            if c:
                total = [t + c * v for t, v in zip(total, images[i])]
        columns.append(target.presentation.image(total))
    return GroupHom.from_images(source.presentation.group, target.presentation.group, columns)


@dataclass(eq=False)
class KH0Map:
    morphism: HermMorphism
    source: KH0Result
    target: KH0Result
    class_map: dict[int, int]
    hom: GroupHom


def induced_kh0_map(f: HermMorphism, dim_bound: int, max_elements: int = MAX_ELEMENTS) -> KH0Map:
    """Apply f entrywise to forms, check it respects isometry classes, and descend to KH₀."""
    ks = kh0(f.source, dim_bound, max_elements)
    kt = kh0(f.target, dim_bound, max_elements)
    class_map: dict[int, int] = {}
    for n in range(1, dim_bound + 1):
        fn = matrix_of_morphism(f, n)
        cs, ct = ks.classifications[n], kt.classifications[n]
        rs, rt = MixedRadix(fn.source.fix), MixedRadix(fn.target.fix)
        for pos, cls in enumerate(cs.classes):
            members = cs.members(pos)
            images = apply_hom(fn.f_fix, rs, rt, members)
            orbits = ct.labels[images]
            if not all(int(o) in ct.orbit_class for o in np.unique(orbits)):
                missing = [int(o) not in ct.orbit_class for o in orbits]
                bad = int(members[np.flatnonzero(missing)[0]])
                raise NotWellDefined(
                    f"image of a {n}-dimensional form is not a form",
                    witness=str(rs.group.element(bad)),
                )
            if np.unique(orbits).size != 1:
                raise NotWellDefined(
                    f"isometric forms map to different classes in dimension {n}",
                    witness=str(cls.representative),
                )
            class_map[ks.offsets[n] + pos] = kt.offsets[n] + ct.orbit_class[int(orbits[0])]

    def image_of(i: int) -> list[int]:
        vec = [0] * kt.generator_count
        vec[class_map[i]] = 1
        return vec

    return KH0Map(f, ks, kt, class_map, _induced_hom(ks, kt, image_of))


def sign_involution(k: KH0Result) -> GroupHom:
    """The automorphism of KH₀ induced by ``B ↦ -B``."""
    gens = k.generators()

    def image_of(i: int) -> list[int]:
        _, cls = gens[i]
        vec = [0] * k.generator_count
        vec[k.generator(negate_form(cls.representative))] = 1
        return vec

    return _induced_hom(k, k, image_of)


def rank_homomorphism(k: KH0Result) -> GroupHom:
    """KH₀ → ℤ, the dimension of a form."""
    integers = FinAbGroup((0,))
    rank_target = Cokernel(1, integers, ((1,),), ((1,),))
    target = KH0Result(k.base, k.dim_bound, {}, [], rank_target, integers.invariants())
    gens = k.generators()
    return _induced_hom(k, target, lambda i: [gens[i][0]])
