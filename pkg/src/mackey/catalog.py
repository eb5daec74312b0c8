"""Built-in Hermitian Mackey functors: fixed-point functors of rings and Burnside-type functors."""

from __future__ import annotations

import logging
from functools import lru_cache

from exactalg import Element, FinAbGroup, FinRingInv, GroupHom, Subgroup, zmod
from exactalg.errors import InvalidAntiInvolution, NotTambara
from exactalg.rings import check_anti_involution
from mackey.functors import ActionTable, HermMackey, MackeyZ2, TambaraZ2, tambara_forget

logger = logging.getLogger("hermackey.mackey")


@lru_cache(maxsize=None)
def _fixed_points(ring: FinRingInv) -> tuple[Subgroup, MackeyZ2]:
    report = check_anti_involution(ring)
    if not report:
        failure = report.first_failure
        raise InvalidAntiInvolution(f"{failure.name}: {failure.witness}")
    under = ring.additive
    fixed = (ring.w - GroupHom.identity(under)).kernel()
    tr = GroupHom.from_function(under, fixed.group, lambda a: fixed.coords(under.add(a, ring.w(a))))
    mackey = MackeyZ2(under, fixed.group, ring.w, fixed.inclusion, tr, f"underline({ring})")
    return fixed, mackey


@lru_cache(maxsize=None)
def underline_tambara(ring: FinRingInv) -> TambaraZ2:
    """Fixed-point Tambara functor of a commutative ring with involution, ``N(a) = a·w(a)``."""
    if not ring.is_commutative():
        raise NotTambara(f"{ring} is not commutative")
    fixed, mackey = _fixed_points(ring)
    fix = fixed.group
    res = fixed.inclusion
    basis = fix.basis()
    constants = tuple(
        tuple(fixed.coords(ring.mul(res(x), res(y))) for y in basis) for x in basis
    )
    fix_ring = FinRingInv(
        fix, constants, fixed.coords(ring.one), GroupHom.identity(fix), f"{ring}^w"
    )

    def norm(a: Element) -> Element:
        return fixed.coords(ring.mul(a, ring.w(a)))

    return TambaraZ2(mackey, ring, fix_ring, norm, f"underline({ring})")


@lru_cache(maxsize=None)
def underline_of_ring(ring: FinRingInv) -> HermMackey:
    """``L(ℤ/2) = R``, ``L(∗) = R^w``, with ``a·b = a·b·w(a)``.

    Commutative rings also carry their fixed-point Tambara structure.
    """
    fixed, mackey = _fixed_points(ring)
    res = fixed.inclusion

    def rule(a: Element, b: Element) -> Element:
        return fixed.coords(ring.product(a, res(b), ring.w(a)))

    tambara = underline_tambara(ring) if ring.is_commutative() else None
    return HermMackey(
        base=mackey,
        ring=ring,
        action=ActionTable(mackey.under, mackey.fix, rule=rule),
        fix_unit=fixed.coords(ring.one),
        tambara=tambara,
        name=f"underline({ring})",
    )


def _burnside_base(m: int) -> MackeyZ2:
    under = FinAbGroup((m,))
    fix = FinAbGroup((m, m))
    # fixed level in the basis (point, free orbit); res counts points
    res = GroupHom(fix, under, ((1, 2),))
    tr = GroupHom(under, fix, ((0,), (1,)))
    return MackeyZ2(under, fix, GroupHom.identity(under), res, tr, f"A/{m}")


@lru_cache(maxsize=None)
def burnside_tambara(m: int) -> TambaraZ2:
    """Burnside ring of ℤ/2 mod m: ``(b, c)(b', c') = (bb', bc' + cb' + 2cc')``."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    base = _burnside_base(m)
    fix = base.fix
    constants = (((1, 0), (0, 1)), ((0, 1), (0, 2)))
    fix_ring = FinRingInv(fix, constants, (1, 0), GroupHom.identity(fix), f"A(Z/2)/{m}")

    def norm(a: Element) -> Element:
        x = a[0] % m
        return (x, (x * x - x) // 2)

    return TambaraZ2(base, zmod(m), fix_ring, norm, f"A/{m}")


@lru_cache(maxsize=None)
def burnside_mod(m: int) -> HermMackey:
    """Burnside Mackey functor mod m with ``a·(b, c) = (a b, b·a(a-1)/2 + a² c)``.

    For even m the fixed level is not the intended 2-local object; the
    structure is still built.
    """
    if m % 2 == 0:
        logger.warning("burnside_mod(%d): even modulus, 2 is not invertible", m)
    return tambara_forget(burnside_tambara(m), name=f"A/{m}")


def catalog_mackey() -> dict[str, HermMackey]:
    """Named functors reachable from problem files."""
    return {
        "underline(Z/2)": underline_of_ring(zmod(2)),
        "underline(Z/3)": underline_of_ring(zmod(3)),
        "underline(Z/5)": underline_of_ring(zmod(5)),
        "burnside_mod(3)": burnside_mod(3),
        "burnside_mod(5)": burnside_mod(5),
    }
