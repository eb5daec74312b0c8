"""Hermitian forms over a Hermitian Mackey functor and their isometries."""

from __future__ import annotations

import enum
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from constructions.matrix import MatrixLayout, matrix_layout, matrix_mackey
from exactalg import Element, RMatrix, invert_matrix, is_invertible
from exactalg.errors import NotAForm, NotUnit
from mackey.functors import HermMackey


def is_form(h: HermMackey, n: int, element: Sequence[int]) -> bool:
    """Whether the restriction of ``element`` is invertible in Mₙ(L(ℤ/2))."""
    layout = matrix_layout(h, n)
    return is_invertible(layout.restriction(layout.fix.reduce(element)))


def _fix_entry(h: HermMackey, value: Element | int) -> Element:
    if isinstance(value, int):
        if h.fix_unit is None:
            if h.fix.rank != 1:
                raise ValueError(f"cannot read {value} as an element of {h.fix}")
            return h.fix.reduce((value,))
        return h.fix.scale(value, h.fix_unit)
    return h.fix.reduce(value)


def _under_entry(h: HermMackey, value: Element | int) -> Element:
    if isinstance(value, int):
        return h.ring.scalar(value)
    return h.under.reduce(value)


@dataclass(frozen=True, eq=False)
class HermForm:
    base: HermMackey
    n: int
    element: Element

    def __post_init__(self):
        layout = matrix_layout(self.base, self.n)
        element = layout.fix.reduce(self.element)
        object.__setattr__(self, "element", element)
        if not is_invertible(layout.restriction(element)):
            raise NotAForm(f"restriction of {element} is not invertible")

    @classmethod
    def from_entries(
        cls,
        base: HermMackey,
        diagonal: Sequence[Element | int],
        upper: Mapping[tuple[int, int], Element | int] | None = None,
    ) -> HermForm:
        """Integers on the diagonal are multiples of the fixed unit, off it multiples of 1."""
        n = len(diagonal)
        layout = matrix_layout(base, n)
        diag = [_fix_entry(base, d) for d in diagonal]
        up = {p: _under_entry(base, v) for p, v in (upper or {}).items()}
        return cls(base, n, layout.join(up, diag))

    @property
    def layout(self) -> MatrixLayout:
        return matrix_layout(self.base, self.n)

    @property
    def mackey(self) -> HermMackey:
        return matrix_mackey(self.base, self.n)

    @property
    def diagonal(self) -> list[Element]:
        return self.layout.split(self.element)[1]

    @property
    def upper(self) -> dict[tuple[int, int], Element]:
        return self.layout.split(self.element)[0]

    def restriction(self) -> RMatrix:
        return self.layout.restriction(self.element)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermForm):
            return NotImplemented
        return self.base is other.base and self.n == other.n and self.element == other.element

    def __hash__(self) -> int:
        return hash((id(self.base), self.n, self.element))

    def __str__(self) -> str:
        diag = ", ".join(str(d[0]) if len(d) == 1 else str(d) for d in self.diagonal)
        if self.n == 1:
            return f"⟨{diag}⟩"
        upper = ", ".join(
            f"{i + 1}{j + 1}:{v[0] if len(v) == 1 else v}" for (i, j), v in self.upper.items()
        )
        return f"[diag({diag}); {upper}]"


def form_action(a: RMatrix, b: HermForm) -> Element:
    """``A·B`` in Mₙ(L)(∗); a form again whenever A is invertible."""
    if a.n != b.n:
        raise ValueError(f"cannot act by a {a.n}x{a.n} matrix on a form of dimension {b.n}")
    return b.layout.act(a, b.element)


def act_on_form(a: RMatrix, b: HermForm) -> HermForm:
    return HermForm(b.base, b.n, form_action(a, b))


class IsometryVerdict(enum.Enum):
    ISOMETRY = "isometry"
    NON_INVERTIBLE_MORPHISM = "non-invertible morphism"
    NOT_A_MORPHISM = "not a morphism"

    def __bool__(self) -> bool:
        return self is IsometryVerdict.ISOMETRY


def is_isometry(lam: RMatrix, source: HermForm, target: HermForm) -> IsometryVerdict:
    """Classify λ against ``source = w(λ)·target``."""
    if not (lam.n == source.n == target.n) or source.base is not target.base:
        return IsometryVerdict.NOT_A_MORPHISM
    if form_action(lam.involution(), target) != source.element:
        return IsometryVerdict.NOT_A_MORPHISM
    if not is_invertible(lam):
        return IsometryVerdict.NON_INVERTIBLE_MORPHISM
    return IsometryVerdict.ISOMETRY


@dataclass(frozen=True)
class Isometry:
    lam: RMatrix
    source: HermForm
    target: HermForm

    def __post_init__(self):
        verdict = is_isometry(self.lam, self.source, self.target)
        if verdict is IsometryVerdict.NON_INVERTIBLE_MORPHISM:
            raise NotUnit("λ satisfies the form equation but is not invertible")
        if verdict is not IsometryVerdict.ISOMETRY:
            raise ValueError(f"{self.source} ≠ w(λ)·{self.target}")


def compose_isometries(second: Isometry, first: Isometry) -> Isometry:
    """``first: B → B'`` and ``second: B' → B''`` give ``μλ: B → B''``."""
    if first.target != second.source:
        raise ValueError("isometries do not compose")
    return Isometry(second.lam @ first.lam, first.source, second.target)


def inverse_isometry(f: Isometry) -> Isometry:
    return Isometry(invert_matrix(f.lam), f.target, f.source)


def identity_isometry(b: HermForm) -> Isometry:
    return Isometry(RMatrix.identity(b.base.ring, b.n), b, b)


def block_sum(b: HermForm, b2: HermForm) -> HermForm:
    if b.base is not b2.base:
        raise ValueError("block sum needs forms over the same functor")
    n = b.n + b2.n
    layout = matrix_layout(b.base, n)
    upper = dict(b.upper)
    upper.update({(i + b.n, j + b.n): v for (i, j), v in b2.upper.items()})
    return HermForm(b.base, n, layout.join(upper, b.diagonal + b2.diagonal))


def permutation_matrix(h: HermMackey, sigma: Sequence[int]) -> RMatrix:
    """``P[σ(a)][a] = 1``."""
    n = len(sigma)
    rows = [[0] * n for _ in range(n)]
    for a, s in enumerate(sigma):
        rows[s][a] = 1
    return RMatrix.from_rows(h.ring, rows)


def sym_permutation(h: HermMackey, n: int, m: int) -> RMatrix:
    """τ_{n,m}, sending the first n coordinates after the last m."""
    sigma = [m + a if a < n else a - n for a in range(n + m)]
    return permutation_matrix(h, sigma)


def symmetry_isometry(b: HermForm, b2: HermForm) -> Isometry:
    """τ_{n,m} as an isometry ``B ⊕ B' → B' ⊕ B``."""
    lam = sym_permutation(b.base, b.n, b2.n)
    return Isometry(lam, block_sum(b, b2), block_sum(b2, b))


def hyperbolic(h: HermMackey, n: int = 1) -> HermForm:
    """n blocks ``(0 1; 1 0)``."""
    layout = matrix_layout(h, 2 * n)
    upper = {(2 * k, 2 * k + 1): h.ring.one for k in range(n)}
    return HermForm(h, 2 * n, layout.join(upper, [h.fix.zero()] * (2 * n)))


def unit_form(h: HermMackey, n: int = 1) -> HermForm:
    if h.fix_unit is None:
        raise ValueError(f"{h} has no distinguished unit form")
    layout = matrix_layout(h, n)
    return HermForm(h, n, layout.diagonal_element([h.fix_unit] * n))


def negate_form(b: HermForm) -> HermForm:
    return HermForm(b.base, b.n, b.layout.fix.neg(b.element))
