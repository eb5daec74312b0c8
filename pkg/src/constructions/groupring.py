"""The group Mackey functor L[π] for a finite group with anti-involution."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from exactalg import Element, FinAbGroup, FinGroup, GroupHom, group_algebra
from exactalg.errors import SectionMismatch
from mackey.functors import ActionTable, HermMackey, MackeyZ2

logger = logging.getLogger("hermackey.constructions")


def default_section(group: FinGroup, tau: Sequence[int]) -> tuple[int, ...]:
    """The label-smaller element of each free τ-orbit, listed by index."""
    labels = group.labels
    return tuple(g for g in range(group.order) if tau[g] != g and labels[g] < labels[tau[g]])


@dataclass(frozen=True, eq=False)
class GroupLayout:
    """Coordinates of L[π](∗).

    One L(∗) block per τ-fixed element, then one L(ℤ/2) block per free orbit.
    """

    base: HermMackey
    group: FinGroup
    tau: tuple[int, ...]
    section: tuple[int, ...]
    order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        n = self.group.order
        if not self.order:
            object.__setattr__(self, "order", tuple(range(n)))
        if sorted(self.order) != list(range(n)):
            raise ValueError("the summation order must list every group element once")
        chosen = set(self.section)
        for g in range(n):
            if self.tau[g] == g:
                if g in chosen:
                    raise SectionMismatch(f"{self.group.label(g)} is fixed by the anti-involution")
            elif (g in chosen) == (self.tau[g] in chosen):
                raise SectionMismatch(
                    f"section must pick exactly one of {self.group.label(g)}, "
                    f"{self.group.label(self.tau[g])}"
                )

    @cached_property
    def fixed(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.group.order) if self.tau[g] == g)

    @cached_property
    def fixed_pos(self) -> dict[int, int]:
        return {g: i for i, g in enumerate(self.fixed)}

    @cached_property
    def orbit_pos(self) -> dict[int, int]:
        """Free element ↦ index of its orbit."""
        pos = {}
        for k, s in enumerate(self.section):
            pos[s] = k
            pos[self.tau[s]] = k
        return pos

    @cached_property
    def fix(self) -> FinAbGroup:
        return FinAbGroup(
            self.base.fix.orders * len(self.fixed) + self.base.under.orders * len(self.section)
        )

    def _offset_fixed(self, g: int) -> int:
        return self.fixed_pos[g] * self.base.fix.rank

    def _offset_orbit(self, k: int) -> int:
        return len(self.fixed) * self.base.fix.rank + k * self.base.under.rank

    def split(self, x: Element) -> tuple[dict[int, Element], list[Element]]:
        rf, ru = self.base.fix.rank, self.base.under.rank
        fixed = {g: tuple(x[self._offset_fixed(g):self._offset_fixed(g) + rf]) for g in self.fixed}
        free = [
            tuple(x[self._offset_orbit(k):self._offset_orbit(k) + ru])
            for k in range(len(self.section))
        ]
        return fixed, free

    def join(self, fixed: dict[int, Element], free: dict[int, Element]) -> Element:
        out: list[int] = []
        for g in self.fixed:
            out.extend(fixed.get(g, self.base.fix.zero()))
        for k in range(len(self.section)):
            out.extend(free.get(k, self.base.under.zero()))
        return self.fix.reduce(out)

    def coefficients(self, a: Element) -> list[Element]:
        ru = self.base.under.rank
        return [tuple(a[g * ru:(g + 1) * ru]) for g in range(self.group.order)]

    def monomial(self, g: int, coeff: Element) -> Element:
        ru = self.base.under.rank
        out = [0] * (ru * self.group.order)
        out[g * ru:(g + 1) * ru] = coeff
        return tuple(out)

    def restriction(self, x: Element) -> Element:
        """``R(b h) = R(b) h`` and ``R(c x) = c s(x) + w(c) τ(s(x))``."""
        h = self.base
        fixed, free = self.split(x)
        coeffs = [h.under.zero()] * self.group.order
        for g, b in fixed.items():
            coeffs[g] = h.res(b)
        for k, c in enumerate(free):
            s = self.section[k]
            coeffs[s] = h.under.add(coeffs[s], c)
            coeffs[self.tau[s]] = h.under.add(coeffs[self.tau[s]], h.w(c))
        return tuple(v for c in coeffs for v in c)

    def transfer(self, a: Element) -> Element:
        """``T(a g) = T(a) g`` on fixed g and ``a [g]`` on free g, with ``w(a)`` off the section."""
        h = self.base
        fixed: dict[int, Element] = {}
        free: dict[int, Element] = {}
        for g, c in enumerate(self.coefficients(a)):
            if not any(c):
                continue
            if g in self.fixed_pos:
                fixed[g] = h.fix.add(fixed.get(g, h.fix.zero()), h.tr(c))
            else:
                k = self.orbit_pos[g]
                term = c if g == self.section[k] else h.w(c)
                free[k] = h.under.add(free.get(k, h.under.zero()), term)
        return self.join(fixed, free)

    def generator_act(self, a: Element, g: int, x: Element) -> Element:
        """``(a g)·ξ``: fixed ``b h ↦ (a·b)(g h τ(g))``; free orbits conjugate by g."""
        h = self.base
        ring, grp = h.ring, self.group
        fixed, free = self.split(x)
        out_fixed: dict[int, Element] = {}
        out_free: dict[int, Element] = {}
        wa = h.w(a)
        for y, b in fixed.items():
            if not any(b):
                continue
            z = grp.mul(grp.mul(g, y), self.tau[g])
            out_fixed[z] = h.fix.add(out_fixed.get(z, h.fix.zero()), h.act(a, b))
        for k, c in enumerate(free):
            if not any(c):
                continue
            z = grp.mul(grp.mul(g, self.section[k]), self.tau[g])
            j = self.orbit_pos[z]
            if z == self.section[j]:
                term = ring.product(a, c, wa)
            else:
                term = ring.product(a, h.w(c), wa)
            out_free[j] = h.under.add(out_free.get(j, h.under.zero()), term)
        return self.join(out_fixed, out_free)


@dataclass(frozen=True)
class GroupMackeySpec:
    base: HermMackey
    group: FinGroup
    tau: tuple[int, ...] | None = None
    section: tuple[int, ...] | None = None

    def build(self) -> HermMackey:
        return group_mackey(self.base, self.group, self.tau, self.section)


def _canonical(group, tau, section, order):
    tau = tuple(group.inverses if tau is None else tau)
    section = default_section(group, tau) if section is None else tuple(sorted(section))
    order = tuple(order) if order else tuple(range(group.order))
    return tau, section, order


def group_layout(
    base: HermMackey,
    group: FinGroup,
    tau: tuple[int, ...] | None = None,
    section: tuple[int, ...] | None = None,
    order: tuple[int, ...] = (),
) -> GroupLayout:
    return _group_layout(base, group, *_canonical(group, tau, section, order))


@lru_cache(maxsize=None)
def _group_layout(base, group, tau, section, order) -> GroupLayout:
    group.check_anti_involution(tau)
    return GroupLayout(base, group, tau, section, order)


def group_mackey(
    base: HermMackey,
    group: FinGroup,
    tau: tuple[int, ...] | None = None,
    section: tuple[int, ...] | None = None,
    order: tuple[int, ...] = (),
) -> HermMackey:
    """L[π] with ``L(ℤ/2)[π]`` underneath and ``L(∗)[π^{ℤ/2}] ⊕ L(ℤ/2)[π^{free}/(ℤ/2)]`` on top.

    A general element ``Σ a_g g`` acts by the generator formula plus the
    correction ``Σ_{g<g'} T(a_g g R(ξ) w(a_{g'}) τ(g'))``, summing in ``order``.
    """
    return _group_mackey(base, group, *_canonical(group, tau, section, order))


@lru_cache(maxsize=None)
def _group_mackey(base, group, tau, section, order) -> HermMackey:
    layout = _group_layout(base, group, tau, section, order)
    ring = group_algebra(base.ring, group, layout.tau)
    under, fix = ring.additive, layout.fix
    logger.debug(
        "building %s[%s]: %d fixed elements, %d free orbits",
        base, group, len(layout.fixed), len(layout.section),
    )
    res = GroupHom.from_function(fix, under, layout.restriction)
    tr = GroupHom.from_function(under, fix, layout.transfer)
    mackey = MackeyZ2(under, fix, ring.w, res, tr, f"{base}[{group}]")

    def rule(a: Element, x: Element) -> Element:
        coeffs = layout.coefficients(a)
        terms = [(g, coeffs[g]) for g in layout.order if any(coeffs[g])]
        total = fix.zero()
        for g, c in terms:
            total = fix.add(total, layout.generator_act(c, g, x))
        rx = layout.restriction(x)
        for p, (g, c) in enumerate(terms):
            left = ring.mul(layout.monomial(g, c), rx)
            for g2, c2 in terms[p + 1:]:
                right = layout.monomial(layout.tau[g2], base.w(c2))
                total = fix.add(total, layout.transfer(ring.mul(left, right)))
        return total

    fix_unit = None
    if base.fix_unit is not None:
        fix_unit = layout.join({group.identity: base.fix_unit}, {})
    return HermMackey(
        base=mackey,
        ring=ring,
        action=ActionTable(under, fix, rule=rule),
        fix_unit=fix_unit,
        name=f"{base}[{group}]",
    )
