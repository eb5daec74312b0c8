"""Comparison isomorphisms and functoriality of the matrix and group constructions."""

from __future__ import annotations

import logging

from constructions.groupring import group_layout, group_mackey
from constructions.matrix import matrix_layout, matrix_mackey
from exactalg import CheckReport, FinGroup, FinRingInv, GroupHom, group_algebra, matrix_ring
from exactalg.errors import SectionMismatch
from mackey.catalog import underline_of_ring
from mackey.functors import HermMackey, hom_mismatch
from mackey.morphisms import HermMorphism, check_herm_morphism

logger = logging.getLogger("hermackey.constructions")


def _identification(source: HermMackey, target: HermMackey, name: str) -> HermMorphism:
    """Identity underneath; on top, the unique map compatible with the restrictions."""
    if source.under != target.under:
        raise ValueError(f"{source} and {target} have different underlying levels")

    def on_fix(x):
        pre = target.base.res.preimage(source.res(x))
        if pre is None:
            raise ValueError(f"restriction of {x} is not w-fixed in {target}")
        return pre

    f_fix = GroupHom.from_function(source.fix, target.fix, on_fix)
    return HermMorphism(source, target, GroupHom.identity(source.under), f_fix, True, name)


def _iso_report(f: HermMorphism) -> CheckReport:
    report = CheckReport(f"comparison {f}")
    report.add("underlying map bijective", f.f_under.is_bijective())
    report.add(
        "fixed-level map bijective",
        f.f_fix.is_bijective(),
        witness=None if f.f_fix.is_bijective() else f"|{f.source.fix}| vs |{f.target.fix}|",
    )
    report.merge(check_herm_morphism(f))
    return report


def matrix_iso_check(ring: FinRingInv, n: int) -> CheckReport:
    """Mₙ(underline R) → underline(Mₙ(R)) as an isomorphism of Hermitian Mackey functors."""
    source = matrix_mackey(underline_of_ring(ring), n)
    target = underline_of_ring(matrix_ring(ring, n))
    return _iso_report(_identification(source, target, f"M{n}(underline {ring}) ≅ underline M{n}"))


def groupring_iso_check(ring: FinRingInv, group: FinGroup) -> CheckReport:
    """underline(R)[π] → underline(R[π]) with the default section on both sides."""
    source = group_mackey(underline_of_ring(ring), group)
    target = underline_of_ring(group_algebra(ring, group))
    return _iso_report(_identification(source, target, f"underline({ring})[{group}] ≅ underline"))


def matrix_of_morphism(f: HermMorphism, n: int) -> HermMorphism:
    source, target = matrix_mackey(f.source, n), matrix_mackey(f.target, n)
    ls, lt = matrix_layout(f.source, n), matrix_layout(f.target, n)
    ru = f.source.under.rank

    def on_under(a):
        blocks = [a[k * ru:(k + 1) * ru] for k in range(n * n)]
        return tuple(v for blk in blocks for v in f.f_under(blk))

    def on_fix(x):
        upper, diag = ls.split(x)
        return lt.join({p: f.f_under(c) for p, c in upper.items()}, [f.f_fix(b) for b in diag])

    return HermMorphism(
        source,
        target,
        GroupHom.from_function(source.under, target.under, on_under),
        GroupHom.from_function(source.fix, target.fix, on_fix),
        f.unital,
        f"M{n}({f})",
    )


def group_of_morphism(
    f: HermMorphism,
    group: FinGroup,
    tau: tuple[int, ...] | None = None,
    source_section: tuple[int, ...] | None = None,
    target_section: tuple[int, ...] | None = None,
) -> HermMorphism:
    ls = group_layout(f.source, group, tau, source_section)
    lt = group_layout(f.target, group, tau, target_section)
    if ls.section != lt.section or ls.tau != lt.tau:
        raise SectionMismatch(f"{f.source}[{group}] and {f.target}[{group}] use different sections")
    source = group_mackey(f.source, group, tau, source_section)
    target = group_mackey(f.target, group, tau, target_section)
    ru = f.source.under.rank

    def on_under(a):
        blocks = [a[g * ru:(g + 1) * ru] for g in range(group.order)]
        return tuple(v for blk in blocks for v in f.f_under(blk))

    def on_fix(x):
        fixed, free = ls.split(x)
        return lt.join(
            {g: f.f_fix(b) for g, b in fixed.items()},
            {k: f.f_under(c) for k, c in enumerate(free)},
        )

    return HermMorphism(
        source,
        target,
        GroupHom.from_function(source.under, target.under, on_under),
        GroupHom.from_function(source.fix, target.fix, on_fix),
        f.unital,
        f"{f}[{group}]",
    )


def apply_construction_to_morphism(
    f: HermMorphism,
    which: str,
    n: int | None = None,
    group: FinGroup | None = None,
    tau: tuple[int, ...] | None = None,
    source_section: tuple[int, ...] | None = None,
    target_section: tuple[int, ...] | None = None,
) -> HermMorphism:
    """Entrywise (``which="matrix"``) or coefficientwise (``which="group"``) application of f."""
    if which == "matrix":
        if n is None:
            raise ValueError("matrix construction needs n")
        return matrix_of_morphism(f, n)
    if which == "group":
        if group is None:
            raise ValueError("group construction needs a group")
        return group_of_morphism(f, group, tau, source_section, target_section)
    raise ValueError(f"unknown construction {which!r}")


def section_independence_check(base: HermMackey, group: FinGroup) -> CheckReport:
    """Compare L[π] for the smallest and the largest element of each free orbit.

    The candidate map is the identity on τ-fixed blocks and on orbits whose
    representative agrees, and ``c ↦ w(c)`` on orbits where it swaps.
    """
    tau = tuple(group.inverses)
    low = group_layout(base, group, tau, None)
    high_section = tuple(tau[s] for s in low.section)
    high = group_layout(base, group, tau, high_section)
    source = group_mackey(base, group, tau, None)
    target = group_mackey(base, group, tau, high_section)

    def on_fix(x):
        fixed, free = low.split(x)
        moved = {}
        for k, c in enumerate(free):
            s = low.section[k]
            j = high.orbit_pos[s]
            moved[j] = c if high.section[j] == s else base.w(c)
        return high.join(fixed, moved)

    f = HermMorphism(
        source,
        target,
        GroupHom.identity(source.under),
        GroupHom.from_function(source.fix, target.fix, on_fix),
        True,
        f"section change on {base}[{group}]",
    )
    return _iso_report(f)


def extension_order_check(base: HermMackey, group: FinGroup) -> CheckReport:
    """The action of L[π] does not depend on the order used in the correction sum."""
    forward = group_mackey(base, group)
    backward = group_mackey(base, group, None, None, tuple(reversed(range(group.order))))
    report = CheckReport(f"summation order on {base}[{group}]")

    def same_action(a):
        j = hom_mismatch(forward.act_hom(a), backward.act_hom(a))
        return None if j is None else f"a={a}: generator {j} acts differently"

    report.verify("action independent of order", forward.under.elements(), same_action)
    return report
