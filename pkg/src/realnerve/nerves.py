"""Real and dihedral nerves of monoids with anti-involution, their subdivided fixed points,
and the maps between them.

Simplices are tuples of monoid element indices:

* ``real_nerve``: ``(m_1, …, m_p)``, involution ``(w m_p, …, w m_1)``.
* ``dihedral_nerve``: ``(m_0, m_1, …, m_p)``, involution ``(w m_0, w m_p, …, w m_1)``.
* ``sym_nerve``: ``(c; l_1, …, l_p)`` with ``c`` fixed, a string of morphisms
  ``c ← w(l_1) c l_1 ← …`` of the category with morphisms ``n → m`` given by
  ``l`` with ``m = w(l) n l``.
* ``symcy_nerve``: ``(x; m_1, …, m_p; y)`` with ``x, y`` fixed, the two-sided bar
  construction for ``x·m = w(m) x m`` and ``m·y = m y w(m)``.
"""

from __future__ import annotations

from collections.abc import Iterable

from exactalg import CheckReport, FinGroup, catalog_groups
from realnerve.monoids import MonoidAI
from realnerve.ssets import (
    MAX_SIMPLICES,
    EdgewiseSubdivision,
    FixedSimplices,
    InvolutiveSSet,
    SemiSimplicialSet,
    Simplex,
    SimplicialMap,
    product_level,
)


class RealNerve(InvolutiveSSet):
    simplicial_involution = False

    def __init__(self, monoid: MonoidAI, truncation: int, max_simplices: int = MAX_SIMPLICES):
        super().__init__(truncation, max_simplices)
        self.monoid = monoid
        self.name = f"N^σ({monoid})"

    def level_size(self, p: int) -> int:
        return self.monoid.size**p

    def generate(self, p: int) -> Iterable[Simplex]:
        return product_level(self.monoid.size, p)

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        if i == 0:
            return x[1:]
        if i == p:
            return x[:-1]
        return x[: i - 1] + (self.monoid.mul(x[i - 1], x[i]),) + x[i + 1 :]

    def involution(self, p: int, x: Simplex) -> Simplex:
        w = self.monoid.w
        return tuple(w[m] for m in reversed(x))

    def fixed_subdivided_size(self, p: int) -> int:
        return self.monoid.size**p * len(self.monoid.fixed)

    def fixed_subdivided(self, p: int) -> list[Simplex]:
        """Fixed ``(2p+1)``-simplices ``(m_1, …, m_p, c, w m_p, …, w m_1)``."""
        w = self.monoid.w
        return [
            m + (c,) + tuple(w[a] for a in reversed(m))
            for m in product_level(self.monoid.size, p)
            for c in self.monoid.fixed
        ]


class DihedralNerve(InvolutiveSSet):
    simplicial_involution = False

    def __init__(self, monoid: MonoidAI, truncation: int, max_simplices: int = MAX_SIMPLICES):
        super().__init__(truncation, max_simplices)
        self.monoid = monoid
        self.name = f"N^di({monoid})"

    def level_size(self, p: int) -> int:
        return self.monoid.size ** (p + 1)

    def generate(self, p: int) -> Iterable[Simplex]:
        return product_level(self.monoid.size, p + 1)

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        mul = self.monoid.mul
        if i == p:
            return (mul(x[p], x[0]),) + x[1:p]
        return x[:i] + (mul(x[i], x[i + 1]),) + x[i + 2 :]

    def involution(self, p: int, x: Simplex) -> Simplex:
        w = self.monoid.w
        return (w[x[0]],) + tuple(w[m] for m in reversed(x[1:]))

    def fixed_subdivided_size(self, p: int) -> int:
        return self.monoid.size**p * len(self.monoid.fixed) ** 2

    def fixed_subdivided(self, p: int) -> list[Simplex]:
        """Fixed ``(2p+1)``-simplices ``(x, m_1, …, m_p, y, w m_p, …, w m_1)``."""
        w = self.monoid.w
        fixed = self.monoid.fixed
        return [
            (x,) + m + (y,) + tuple(w[a] for a in reversed(m))
            for x in fixed
            for m in product_level(self.monoid.size, p)
            for y in fixed
        ]


class SymNerve(SemiSimplicialSet):
    def __init__(self, monoid: MonoidAI, truncation: int, max_simplices: int = MAX_SIMPLICES):
        super().__init__(truncation, max_simplices)
        self.monoid = monoid
        self.name = f"N sym({monoid})"

    def level_size(self, p: int) -> int:
        return len(self.monoid.fixed) * self.monoid.size**p

    def generate(self, p: int) -> Iterable[Simplex]:
        for c in self.monoid.fixed:
            for ls in product_level(self.monoid.size, p):
                yield (c,) + ls

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        m = self.monoid
        if i == 0:
            return x[:1] + x[2:]
        if i == p:
            last = x[p]
            return (m.product(m.w[last], x[0], last),) + x[1:p]
        return x[:i] + (m.mul(x[i + 1], x[i]),) + x[i + 2 :]


class SymCyNerve(SemiSimplicialSet):
    def __init__(self, monoid: MonoidAI, truncation: int, max_simplices: int = MAX_SIMPLICES):
        super().__init__(truncation, max_simplices)
        self.monoid = monoid
        self.name = f"N sym^cy({monoid})"

    def level_size(self, p: int) -> int:
        return len(self.monoid.fixed) ** 2 * self.monoid.size**p

    def generate(self, p: int) -> Iterable[Simplex]:
        fixed = self.monoid.fixed
        for x in fixed:
            for ms in product_level(self.monoid.size, p):
                for y in fixed:
                    yield (x,) + ms + (y,)

    def face(self, p: int, i: int, s: Simplex) -> Simplex:
        m = self.monoid
        if i == 0:
            first = s[1]
            return (m.product(m.w[first], s[0], first),) + s[2:]
        if i == p:
            last = s[p]
            return s[:p] + (m.product(last, s[p + 1], m.w[last]),)
        return s[:i] + (m.mul(s[i], s[i + 1]),) + s[i + 2 :]


class OnePoint(SemiSimplicialSet):
    """One simplex in every level."""

    name = "pt"

    def level_size(self, p: int) -> int:
        return 1

    def generate(self, p: int) -> Iterable[Simplex]:
        return [()]

    def face(self, p: int, i: int, x: Simplex) -> Simplex:
        return ()


def real_nerve(m: MonoidAI, truncation: int) -> RealNerve:
    return RealNerve(m, truncation)


def dihedral_nerve(m: MonoidAI, truncation: int) -> DihedralNerve:
    return DihedralNerve(m, truncation)


def group_nerve(group: FinGroup, truncation: int) -> RealNerve:
    """``Nπ``; the involution by inversion is carried but plays no role in homology."""
    nerve = RealNerve(MonoidAI.from_group(group), truncation)
    nerve.name = f"N({group})"
    return nerve


def sym_nerve(m: MonoidAI, truncation: int) -> SymNerve:
    return SymNerve(m, truncation)


def symcy_nerve(m: MonoidAI, truncation: int) -> SymCyNerve:
    return SymCyNerve(m, truncation)


def edgewise_subdivide(x: InvolutiveSSet) -> EdgewiseSubdivision:
    return EdgewiseSubdivision(x)


def subdivided_real(m: MonoidAI, truncation: int) -> EdgewiseSubdivision:
    """``sd_e N^σ M`` through level ``truncation``."""
    return EdgewiseSubdivision(RealNerve(m, 2 * truncation + 1))


def subdivided_dihedral(m: MonoidAI, truncation: int) -> EdgewiseSubdivision:
    return EdgewiseSubdivision(DihedralNerve(m, 2 * truncation + 1))


def sigma_fixed_map(m: MonoidAI, truncation: int) -> SimplicialMap:
    """``(sd_e N^σ M)^{ℤ/2} → N sym M``, ``(m_1..m_p, c, …) ↦ (c; w m_1, …, w m_p)``."""
    source = FixedSimplices(subdivided_real(m, truncation))
    target = SymNerve(m, truncation)
    w = m.w

    def func(p: int, x: Simplex) -> Simplex:
        return (x[p],) + tuple(w[a] for a in x[:p])

    return SimplicialMap(source, target, func, "σ-fixed identification")


def di_fixed_map(m: MonoidAI, truncation: int) -> SimplicialMap:
    """``(sd_e N^di M)^{ℤ/2} → N(M^{ℤ/2}; M; M^{ℤ/2})``, keeping ``(x, m_1..m_p, y)``."""
    source = FixedSimplices(subdivided_dihedral(m, truncation))
    target = SymCyNerve(m, truncation)
    return SimplicialMap(source, target, lambda p, x: x[: p + 2], "dihedral fixed identification")


def _iso_report(f: SimplicialMap, subject: str) -> CheckReport:
    report = CheckReport(subject)
    if isinstance(f.source, FixedSimplices):
        report.merge(f.source.check_listing())
    report.merge(f.check_simplicial())
    for p in range(f.truncation + 1):
        src = f.source.simplices(p)
        images = {f(p, x) for x in src}
        report.add(
            f"level {p} bijective",
            len(images) == len(src) == f.target.level_size(p) and images <= set(f.target.index(p)),
            len(src),
        )
    return report


def check_sigma_fixed_iso(m: MonoidAI, truncation: int) -> CheckReport:
    return _iso_report(sigma_fixed_map(m, truncation), f"(sd_e N^σ {m})^Z/2 ≅ N sym {m}")


def check_di_fixed_iso(m: MonoidAI, truncation: int) -> CheckReport:
    return _iso_report(di_fixed_map(m, truncation), f"(sd_e N^di {m})^Z/2 ≅ N sym^cy {m}")


def lambda_map(group: FinGroup, truncation: int) -> SimplicialMap:
    """``Nπ → (sd_e N^σπ)^{ℤ/2}``, ``(g_1..g_p) ↦ (g_1..g_p, 1, g_p⁻¹..g_1⁻¹)``."""
    source = group_nerve(group, truncation)
    monoid = source.monoid
    target = FixedSimplices(subdivided_real(monoid, truncation))
    e = group.identity
    inv = group.inverses

    def func(p: int, g: Simplex) -> Simplex:
        return g + (e,) + tuple(inv[a] for a in reversed(g))

    return SimplicialMap(source, target, func, "λ")


def projection_p(m: MonoidAI, truncation: int, fixed: bool = False) -> SimplicialMap:
    """``sd_e N^di M → sd_e N^σ M`` dropping ``m_0``.

    With ``fixed`` the restriction to fixed simplices.
    """
    source: SemiSimplicialSet = subdivided_dihedral(m, truncation)
    target: SemiSimplicialSet = subdivided_real(m, truncation)
    if fixed:
        source, target = FixedSimplices(source), FixedSimplices(target)
    return SimplicialMap(source, target, lambda p, x: x[1:], "p")


def fixed_projection_on_bar(m: MonoidAI, truncation: int) -> SimplicialMap:
    """``N(M^{ℤ/2}; M; M^{ℤ/2}) → N sym M``: p on fixed points."""
    w = m.w

    def func(p: int, s: Simplex) -> Simplex:
        return (s[p + 1],) + tuple(w[a] for a in s[1 : p + 1])

    return SimplicialMap(
        SymCyNerve(m, truncation), SymNerve(m, truncation), func, "forget left coordinate"
    )


def monoid_catalog() -> dict[str, MonoidAI]:
    """Catalog groups under inversion, plus two monoids that are not groups.

    ``Null2`` has zero multiplication and no unit; ``MulZ3`` is ℤ/3 under multiplication.
    """
    catalog = {name: MonoidAI.from_group(g) for name, g in catalog_groups().items()}
    catalog["Null2"] = MonoidAI(((0, 0), (0, 0)), (0, 1), ("0", "a"), "Null2")
    mul = tuple(tuple(a * b % 3 for b in range(3)) for a in range(3))
    catalog["MulZ3"] = MonoidAI(mul, (0, 1, 2), ("0", "1", "2"), "MulZ3")
    return catalog


def level_counts(x: SemiSimplicialSet, top: int | None = None) -> list[int]:
    top = x.truncation if top is None else top
    return [x.level_size(p) for p in range(top + 1)]


def one_point(truncation: int) -> OnePoint:
    return OnePoint(truncation)
