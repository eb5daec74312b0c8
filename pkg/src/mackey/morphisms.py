"""Morphisms of Hermitian Mackey functors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from exactalg import CheckReport, GroupHom
from mackey.functors import HermMackey, fmt, hom_mismatch


@dataclass(frozen=True, eq=False)
class HermMorphism:
    """A pair of additive maps ``(f_under, f_fix)`` between two Hermitian functors."""

    source: HermMackey
    target: HermMackey
    f_under: GroupHom
    f_fix: GroupHom
    unital: bool = True
    name: str = ""

    def __post_init__(self):
        if self.f_under.source != self.source.under or self.f_under.target != self.target.under:
            raise ValueError("f_under must map the underlying levels")
        if self.f_fix.source != self.source.fix or self.f_fix.target != self.target.fix:
            raise ValueError("f_fix must map the fixed levels")

    def same_maps(self, other: HermMorphism) -> bool:
        return self.f_under == other.f_under and self.f_fix == other.f_fix

    def is_bijective(self) -> bool:
        return self.f_under.is_bijective() and self.f_fix.is_bijective()

    def preserves_unit(self) -> bool:
        """Whether both levels send units to units; False when a fixed unit is unknown."""
        if self.f_under(self.source.ring.one) != self.target.ring.one:
            return False
        if self.source.fix_unit is None or self.target.fix_unit is None:
            return False
        return self.f_fix(self.source.fix_unit) == self.target.fix_unit

    def __str__(self) -> str:
        return self.name or f"{self.source} → {self.target}"


def identity_morphism(h: HermMackey) -> HermMorphism:
    under, fix = GroupHom.identity(h.under), GroupHom.identity(h.fix)
    return HermMorphism(h, h, under, fix, True, f"id({h})")


def compose(second: HermMorphism, first: HermMorphism) -> HermMorphism:
    """``second ∘ first``."""
    if first.target is not second.source:
        raise ValueError(f"cannot compose {second} after {first}")
    return HermMorphism(
        first.source,
        second.target,
        second.f_under.compose(first.f_under),
        second.f_fix.compose(first.f_fix),
        first.unital and second.unital,
        f"{second}∘{first}",
    )


def check_herm_morphism(f: HermMorphism) -> CheckReport:
    """Compatibility with w, res, tr, the ring products and the action."""
    report = CheckReport(f"morphism {f}")
    s, t = f.source, f.target
    for label, hom in (("f_under", f.f_under), ("f_fix", f.f_fix)):
        j = hom.ill_defined_generator()
        report.add(
            f"{label} additive",
            j is None,
            witness=None if j is None else f"generator {j} violates its order",
        )

    def commutes(name: str, left: GroupHom, right: GroupHom):
        j = hom_mismatch(left, right)
        x = left.source.basis()[j] if j is not None else None
        report.add(
            name,
            j is None,
            left.source.rank,
            None if x is None else f"x={fmt(x)}: {fmt(left(x))} ≠ {fmt(right(x))}",
        )

    commutes("f∘w = w∘f", f.f_under.compose(s.base.w), t.base.w.compose(f.f_under))
    commutes("f∘res = res∘f", f.f_under.compose(s.base.res), t.base.res.compose(f.f_fix))
    commutes("f∘tr = tr∘f", f.f_fix.compose(s.base.tr), t.base.tr.compose(f.f_under))

    def multiplicative(pair):
        x, y = pair
        left = f.f_under(s.ring.mul(x, y))
        right = t.ring.mul(f.f_under(x), f.f_under(y))
        return None if left == right else f"x={fmt(x)}, y={fmt(y)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify(
        "f(xy) = f(x)f(y)", itertools.product(s.under.basis(), repeat=2), multiplicative
    )
    if f.unital:
        one = f.f_under(s.ring.one)
        report.add(
            "f(1) = 1",
            one == t.ring.one,
            witness=None if one == t.ring.one else f"f(1) = {fmt(one)}",
        )

    def equivariant(pair):
        a, b = pair
        left = f.f_fix(s.act(a, b))
        right = t.act(f.f_under(a), f.f_fix(b))
        if left == right:
            return None
        return f"a={fmt(a)}, b={fmt(b)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify(
        "f(a·b) = f(a)·f(b)",
        itertools.product(list(s.under.elements()), s.fix.basis()),
        equivariant,
    )
    return report
