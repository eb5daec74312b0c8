"""ℤ/2-Mackey functors with Hermitian and Tambara structure, and their axiom checks."""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from exactalg import CheckReport, Element, FinAbGroup, FinRingInv, GroupHom
from exactalg.rings import check_anti_involution, check_ring_axioms

logger = logging.getLogger("hermackey.mackey")

EXHAUSTIVE_BUDGET = 10**8
SAMPLE_COUNT = 10**6

Rule = Callable[[Element, Element], Element]


def fmt(x: Element) -> str:
    return str(x[0]) if len(x) == 1 else str(tuple(x))


def hom_mismatch(f: GroupHom, g: GroupHom) -> int | None:
    """First generator on which two homomorphisms with equal source differ."""
    for j, (a, b) in enumerate(zip(f.images(), g.images())):
        if f.target.reduce(a) != g.target.reduce(b):
            return j
    return None


@dataclass(frozen=True, eq=False)
class MackeyZ2:
    """Levels ``under = L(ℤ/2)`` and ``fix = L(∗)`` with w, restriction and transfer."""

    under: FinAbGroup
    fix: FinAbGroup
    w: GroupHom
    res: GroupHom
    tr: GroupHom
    name: str = ""

    def __post_init__(self):
        shapes = {
            "w": (self.w, self.under, self.under),
            "res": (self.res, self.fix, self.under),
            "tr": (self.tr, self.under, self.fix),
        }
        for label, (hom, src, tgt) in shapes.items():
            if hom.source != src or hom.target != tgt:
                raise ValueError(f"{label} has the wrong source or target")

    def __str__(self) -> str:
        return self.name or "Mackey functor"


class ActionTable:
    """The action of ``under`` on ``fix``, one endomorphism of ``fix`` per element.

    Endomorphisms come either from an explicit table or from a rule evaluated
    on the generators of ``fix``; they are built on first use and kept.
    """

    def __init__(
        self,
        under: FinAbGroup,
        fix: FinAbGroup,
        rule: Rule | None = None,
        table: Mapping[Element, GroupHom] | None = None,
    ):
        if (rule is None) == (table is None):
            raise ValueError("an action needs exactly one of a rule or a table")
        self.under = under
        self.fix = fix
        self.rule = rule
        self._table: dict[Element, GroupHom] = dict(table or {})

    def endomorphism(self, a: Element) -> GroupHom:
        a = self.under.reduce(a)
        hom = self._table.get(a)
        if hom is None:
            if self.rule is None:
                raise KeyError(f"no action recorded for {a}")
            hom = GroupHom.from_function(self.fix, self.fix, lambda b: self.rule(a, b))
            self._table[a] = hom
        return hom

    def __call__(self, a: Element, b: Element) -> Element:
        return self.endomorphism(a)(b)

    def tabulate(self) -> dict[Element, GroupHom]:
        return {a: self.endomorphism(a) for a in self.under.elements()}


@dataclass(frozen=True, eq=False)
class TambaraZ2:
    """Ring structures on both levels and a multiplicative norm ``under → fix``."""

    base: MackeyZ2
    under_ring: FinRingInv
    fix_ring: FinRingInv
    norm: Callable[[Element], Element]
    name: str = ""

    def N(self, a: Element) -> Element:
        return self.base.fix.reduce(self.norm(self.base.under.reduce(a)))

    def __str__(self) -> str:
        return self.name or f"Tambara structure on {self.base}"


@dataclass(frozen=True, eq=False)
class HermMackey:
    base: MackeyZ2
    ring: FinRingInv
    action: ActionTable
    fix_unit: Element | None = None
    tambara: TambaraZ2 | None = None
    name: str = ""
    notes: tuple[str, ...] = field(default=())

    @property
    def under(self) -> FinAbGroup:
        return self.base.under

    @property
    def fix(self) -> FinAbGroup:
        return self.base.fix

    def w(self, a: Element) -> Element:
        return self.base.w(a)

    def res(self, b: Element) -> Element:
        return self.base.res(b)

    def tr(self, a: Element) -> Element:
        return self.base.tr(a)

    def act(self, a: Element, b: Element) -> Element:
        return self.action(a, b)

    def act_hom(self, a: Element) -> GroupHom:
        return self.action.endomorphism(a)

    def __str__(self) -> str:
        return self.name or str(self.base)


def check_mackey_axioms(m: MackeyZ2) -> CheckReport:
    """w∘w = id, w∘res = res, tr∘w = tr and res∘tr = id + w, as map identities."""
    report = CheckReport(f"Mackey axioms of {m}")
    for label, hom in (("w", m.w), ("res", m.res), ("tr", m.tr)):
        j = hom.ill_defined_generator()
        report.add(
            f"{label} well defined",
            j is None,
            witness=None if j is None else f"generator {j} violates its order",
        )

    def compare(name: str, left: GroupHom, right: GroupHom, show: Callable[[Element], str]):
        j = hom_mismatch(left, right)
        if j is None:
            report.add(name, True, left.source.rank)
            return
        x = left.source.basis()[j]
        report.add(name, False, j + 1, f"{show(x)} [{fmt(left(x))} ≠ {fmt(right(x))}]")

    under_id = GroupHom.identity(m.under)
    compare("w∘w = id", m.w.compose(m.w), under_id, lambda x: f"w(w({fmt(x)})) ≠ {fmt(x)}")
    compare("w∘res = res", m.w.compose(m.res), m.res, lambda x: f"w(res({fmt(x)})) ≠ res({fmt(x)})")
    compare("tr∘w = tr", m.tr.compose(m.w), m.tr, lambda x: f"tr(w({fmt(x)})) ≠ tr({fmt(x)})")
    compare(
        "res∘tr = id + w",
        m.res.compose(m.tr),
        under_id + m.w,
        lambda x: f"res∘tr({fmt(x)}) ≠ {fmt(x)}+w({fmt(x)})",
    )
    return report


def _triples(
    h: HermMackey, budget: int, samples: int, seed: int, report: CheckReport
) -> tuple:
    """Triples (a, a', b) for the three-variable laws.

    Exhaustive over a, a' and the generators of ``fix`` when the full triple
    count fits the budget; otherwise seeded samples with random ``b``.
    """
    u_size, f_size = h.under.size, h.fix.size
    if u_size * u_size * f_size <= budget:
        return itertools.product(list(h.under.elements()), repeat=2), h.fix.basis()
    report.mode, report.seed, report.samples = "sampled", seed, samples
    logger.warning(
        "%s: %d triples exceed the budget %d, sampling %d with seed %d",
        h, u_size * u_size * f_size, budget, samples, seed,
    )
    rng = random.Random(seed)
    picks = []
    for _ in range(samples):
        a = h.under.element(rng.randrange(u_size))
        a2 = h.under.element(rng.randrange(u_size))
        b = h.fix.element(rng.randrange(f_size))
        picks.append(((a, a2), b))
    return picks, None


def check_hermitian_axioms(
    h: HermMackey,
    budget: int = EXHAUSTIVE_BUDGET,
    samples: int = SAMPLE_COUNT,
    seed: int = 0,
) -> CheckReport:
    """Axioms (i)–(iv) and the monoid-action laws.

    Both sides of (ii), (iii), (iv) and of associativity are additive in the
    fixed-level argument, so exhaustive mode checks generators of it.
    """
    report = CheckReport(f"Hermitian axioms of {h}")
    report.merge(check_mackey_axioms(h.base))
    report.merge(check_ring_axioms(h.ring), "(i) ")
    report.merge(check_anti_involution(h.ring), "(i) ")
    report.add(
        "(i) ring sits on the underlying level",
        h.ring.additive == h.under and h.ring.w == h.base.w,
        witness=None if h.ring.w == h.base.w else "ring involution differs from w",
    )
    ring = h.ring
    under_elems = list(h.under.elements())
    fix_basis = h.fix.basis()

    def well_defined(a):
        j = h.act_hom(a).ill_defined_generator()
        return None if j is None else f"a={fmt(a)}: action breaks the order of generator {j}"

    report.verify("action additive in b", under_elems, well_defined)

    if h.action.rule is not None:
        if h.under.size * h.fix.size <= budget:
            pairs = itertools.product(under_elems, list(h.fix.elements()))
        else:
            rng = random.Random(seed)
            pairs = [
                (h.under.element(rng.randrange(h.under.size)),
                 h.fix.element(rng.randrange(h.fix.size)))
                for _ in range(min(samples, h.under.size * h.fix.size))
            ]

        def matches_rule(ab):
            a, b = ab
            direct = h.fix.reduce(h.action.rule(a, b))
            tabled = h.act(a, b)
            if direct == tabled:
                return None
            return f"a={fmt(a)}, b={fmt(b)}: rule {direct} ≠ table {tabled}"

        report.verify("action table matches its rule", pairs, matches_rule)

    def axiom_ii(ab):
        a, b = ab
        left = h.res(h.act(a, b))
        right = ring.product(a, h.res(b), h.w(a))
        return None if left == right else f"a={fmt(a)}, b={fmt(b)}: {fmt(left)} ≠ {fmt(right)}"

    cases = itertools.product(under_elems, fix_basis)
    report.verify("(ii) res(a·b) = a·res(b)·w(a)", cases, axiom_ii)

    def axiom_iii(ac):
        a, c = ac
        left = h.act(a, h.tr(c))
        right = h.tr(ring.product(a, c, h.w(a)))
        return None if left == right else f"a={fmt(a)}, c={fmt(c)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify(
        "(iii) a·tr(c) = tr(a·c·w(a))",
        itertools.product(under_elems, h.under.basis()),
        axiom_iii,
    )

    zero_hom = h.act_hom(h.under.zero())
    report.add(
        "(iv) 0·b = 0",
        all(not any(col) for col in zero_hom.images()),
        witness=None if all(not any(c) for c in zero_hom.images()) else "0 acts nontrivially",
    )
    one_hom = h.act_hom(ring.one)
    mismatch = hom_mismatch(one_hom, GroupHom.identity(h.fix))
    report.add(
        "1·b = b",
        mismatch is None,
        witness=None if mismatch is None else f"1 moves generator {mismatch}",
    )

    pairs, basis = _triples(h, budget, samples, seed, report)
    if basis is not None:
        cases = ((aa, b) for aa in pairs for b in basis)
    else:
        cases = iter(pairs)
    cases = list(cases)

    def axiom_iv(case):
        (a, a2), b = case
        left = h.act(h.under.add(a, a2), b)
        corr = h.tr(ring.product(a, h.res(b), h.w(a2)))
        right = h.fix.add(h.fix.add(h.act(a, b), h.act(a2, b)), corr)
        if left == right:
            return None
        return f"a={fmt(a)}, a'={fmt(a2)}, b={fmt(b)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify("(iv) (a+a')·b = a·b + a'·b + tr(a·res(b)·w(a'))", cases, axiom_iv)

    def associative(case):
        (a, a2), b = case
        left = h.act(a, h.act(a2, b))
        right = h.act(ring.mul(a, a2), b)
        if left == right:
            return None
        return f"a={fmt(a)}, a'={fmt(a2)}, b={fmt(b)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify("a·(a'·b) = (aa')·b", cases, associative)
    return report


def check_tambara_axioms(
    t: TambaraZ2, budget: int = EXHAUSTIVE_BUDGET, seed: int = 0
) -> CheckReport:
    report = CheckReport(f"Tambara axioms of {t}")
    m = t.base
    report.merge(check_mackey_axioms(m))
    report.merge(check_ring_axioms(t.under_ring), "under ")
    report.merge(check_ring_axioms(t.fix_ring), "fix ")
    report.add(
        "ring levels match the Mackey levels",
        t.under_ring.additive == m.under and t.fix_ring.additive == m.fix,
    )
    commutative = t.under_ring.is_commutative() and t.fix_ring.is_commutative()
    report.add("rings are commutative", commutative)
    ur, fr = t.under_ring, t.fix_ring
    ub, fb = m.under.basis(), m.fix.basis()

    def w_multiplicative(pair):
        x, y = pair
        return None if m.w(ur.mul(x, y)) == ur.mul(m.w(x), m.w(y)) else f"w({x}{y}) ≠ w({x})w({y})"

    report.verify("w is a ring map", itertools.product(ub, repeat=2), w_multiplicative)

    def res_multiplicative(pair):
        x, y = pair
        return None if m.res(fr.mul(x, y)) == ur.mul(m.res(x), m.res(y)) else f"res({x}{y})"

    report.verify("res is a ring map", itertools.product(fb, repeat=2), res_multiplicative)
    report.add("res(1) = 1", m.res(fr.one) == ur.one)

    def frobenius(pair):
        a, b = pair
        left, right = fr.mul(m.tr(a), b), m.tr(ur.mul(a, m.res(b)))
        return None if left == right else f"a={fmt(a)}, b={fmt(b)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify("tr(a)·b = tr(a·res(b))", itertools.product(ub, fb), frobenius)

    under_elems = list(m.under.elements())

    def res_norm(a):
        left, right = m.res(t.N(a)), ur.mul(a, m.w(a))
        return None if left == right else f"a={fmt(a)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify("res(N(a)) = a·w(a)", under_elems, res_norm)
    n0, n1 = t.N(m.under.zero()), t.N(ur.one)
    report.add("N(0) = 0", not any(n0), witness=None if not any(n0) else f"N(0) = {fmt(n0)}")
    report.add("N(1) = 1", n1 == fr.one, witness=None if n1 == fr.one else f"N(1) = {fmt(n1)}")

    if len(under_elems) ** 2 <= budget:
        pairs = list(itertools.product(under_elems, repeat=2))
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(under_elems), rng.choice(under_elems)) for _ in range(SAMPLE_COUNT)]
        report.mode, report.seed, report.samples = "sampled", seed, SAMPLE_COUNT

    def norm_additivity(pair):
        a, a2 = pair
        left = t.N(m.under.add(a, a2))
        right = m.fix.add(m.fix.add(t.N(a), t.N(a2)), m.tr(ur.mul(a, m.w(a2))))
        return None if left == right else f"a={fmt(a)}, a'={fmt(a2)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify("N(a+a') = N(a)+N(a')+tr(a·w(a'))", pairs, norm_additivity)

    def norm_multiplicative(pair):
        a, a2 = pair
        left, right = t.N(ur.mul(a, a2)), fr.mul(t.N(a), t.N(a2))
        return None if left == right else f"a={fmt(a)}, a'={fmt(a2)}: {fmt(left)} ≠ {fmt(right)}"

    report.verify("N(aa') = N(a)N(a')", pairs, norm_multiplicative)
    return report


def tambara_forget(t: TambaraZ2, name: str | None = None) -> HermMackey:
    """The Hermitian structure ``a·b = N(a)·b``."""
    fr = t.fix_ring

    def rule(a: Element, b: Element) -> Element:
        return fr.mul(t.N(a), b)

    ring = t.under_ring
    if ring.w != t.base.w:
        ring = ring.with_involution(t.base.w)
    return HermMackey(
        base=t.base,
        ring=ring,
        action=ActionTable(t.base.under, t.base.fix, rule=rule),
        fix_unit=fr.one,
        tambara=t,
        name=name or f"forget({t})",
    )
