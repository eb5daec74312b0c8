"""The rank map A/m → underline(ℤ/m) and its non-unital section, half the transfer."""

from __future__ import annotations

from collections.abc import Callable

from constructions.groupring import group_layout, group_mackey
from exactalg import Element, FinGroup, GroupHom, zmod
from exactalg.errors import EvenModulus
from mackey.catalog import burnside_mod, underline_of_ring
from mackey.functors import HermMackey
from mackey.morphisms import HermMorphism


def _fixed_map(
    source: HermMackey,
    target: HermMackey,
    group: FinGroup | None,
    block: Callable[[Element], Element],
) -> tuple[HermMackey, HermMackey, GroupHom]:
    """Apply ``block`` on τ-fixed summands and the identity on free orbits."""
    if group is None:
        return source, target, GroupHom.from_function(source.fix, target.fix, block)
    ls, lt = group_layout(source, group), group_layout(target, group)
    big_source, big_target = group_mackey(source, group), group_mackey(target, group)

    def on_fix(x):
        fixed, free = ls.split(x)
        return lt.join({g: block(b) for g, b in fixed.items()}, dict(enumerate(free)))

    return big_source, big_target, GroupHom.from_function(big_source.fix, big_target.fix, on_fix)


def rank_map(m: int, group: FinGroup | None = None) -> HermMorphism:
    """d: A/m[π] → underline(ℤ/m)[π], ``(b, c) ↦ b + 2c`` on τ-fixed summands."""

    def d(b: Element) -> Element:
        return (b[0] + 2 * b[1],)

    source, target, f_fix = _fixed_map(burnside_mod(m), underline_of_ring(zmod(m)), group, d)
    name = f"d{m}" if group is None else f"d{m}[{group}]"
    return HermMorphism(source, target, GroupHom.identity(source.under), f_fix, True, name)


def half_transfer_section(m: int, group: FinGroup | None = None) -> HermMorphism:
    """T/2: underline(ℤ/m)[π] → A/m[π], ``b ↦ (0, b/2)`` on τ-fixed summands; not unital."""
    if m % 2 == 0:
        raise EvenModulus(f"2 is not invertible modulo {m}")
    half = pow(2, -1, m)

    def t_half(b: Element) -> Element:
        return (0, half * b[0])

    source, target, f_fix = _fixed_map(underline_of_ring(zmod(m)), burnside_mod(m), group, t_half)
    name = f"half{m}" if group is None else f"half{m}[{group}]"
    return HermMorphism(source, target, GroupHom.identity(source.under), f_fix, False, name)
