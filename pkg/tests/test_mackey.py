"""Tests for Mackey, Hermitian and Tambara structures and their morphisms."""

import dataclasses
import logging

import pytest

from exactalg import FinAbGroup, GroupHom, matrix_ring, zmod
from exactalg.errors import EvenModulus, NotTambara
from mackey import (
    ActionTable,
    MackeyZ2,
    burnside_mod,
    burnside_tambara,
    check_herm_morphism,
    check_hermitian_axioms,
    check_mackey_axioms,
    check_tambara_axioms,
    compose,
    identity_morphism,
    tambara_forget,
    underline_of_ring,
    underline_tambara,
)
from mackey.rank import half_transfer_section, rank_map


@pytest.mark.parametrize(
    "ring",
    [zmod(3), zmod(4), zmod(5), zmod(9), matrix_ring(zmod(3), 2)],
    ids=["Z3", "Z4", "Z5", "Z9", "M2Z3"],
)
def test_underline_axioms(ring):
    """Fixed-point functors of the catalog rings satisfy every axiom exhaustively."""
    report = check_hermitian_axioms(underline_of_ring(ring))

    assert report.passed, report.summary()
    assert report.mode == "exhaustive"


@pytest.mark.parametrize("m", [3, 5])
def test_burnside_axioms(m):
    """Burnside functors mod 3 and 5 are Hermitian and Tambara."""
    assert check_hermitian_axioms(burnside_mod(m)).passed
    assert check_tambara_axioms(burnside_tambara(m)).passed


def test_burnside_levels(a3):
    """A/3 has Z/3 underneath and (Z/3)^2 on top; res∘tr = id + w."""
    assert a3.under.orders == (3,)
    assert a3.fix.orders == (3, 3)
    assert a3.res((1, 1)) == (0,)
    assert a3.res(a3.tr((1,))) == (2,)


def test_burnside_action(a3):
    """a·(b, c) = (ab, b·a(a-1)/2 + a²c)."""
    assert a3.act((2,), (1, 0)) == (2, 1)
    assert a3.act((2,), (0, 1)) == (0, 1)
    assert a3.fix_unit == (1, 0)


def test_underline_tambara_norm():
    """N(a) = a·w(a) on the fixed-point Tambara functor of Z/5."""
    t = underline_tambara(zmod(5))

    assert check_tambara_axioms(t).passed
    assert t.N((2,)) == (4,)


def test_noncommutative_ring_has_no_tambara():
    """M2(Z/3) has no fixed-point Tambara structure."""
    with pytest.raises(NotTambara):
        underline_tambara(matrix_ring(zmod(3), 2))
    assert underline_of_ring(matrix_ring(zmod(3), 2)).tambara is None


def test_even_burnside_warns(caplog):
    """Even moduli still build but log a warning."""
    with caplog.at_level(logging.WARNING, logger="hermackey.mackey"):
        burnside_mod(6)

    assert "even modulus" in caplog.text


def test_broken_transfer_reported():
    """A zero transfer on Z/3 breaks res∘tr = id + w with a witness."""
    g = FinAbGroup((3,))
    ident = GroupHom.identity(g)
    m = MackeyZ2(g, g, ident, ident, GroupHom.zero(g, g), "broken")
    report = check_mackey_axioms(m)

    assert not report.passed
    assert report.first_failure.name == "res∘tr = id + w"
    assert report.first_failure.witness


def test_sampled_verification_is_seeded(a3):
    """Above the budget the checker samples, reproducibly for a fixed seed."""
    first = check_hermitian_axioms(a3, budget=1, samples=50, seed=7)
    second = check_hermitian_axioms(a3, budget=1, samples=50, seed=7)

    assert first.mode == "sampled"
    assert (first.seed, first.samples) == (7, 50)
    assert first.passed
    assert first.summary() == second.summary()


@pytest.mark.parametrize("m", [3, 5])
def test_rank_and_half_transfer_morphisms(m):
    """d is unital, T/2 is not, and both respect every structure map."""
    d = rank_map(m)
    half = half_transfer_section(m)

    assert check_herm_morphism(d).passed
    assert check_herm_morphism(half).passed
    assert d.unital and not half.unital
    assert d.preserves_unit()


def test_rank_after_half_is_identity():
    """d ∘ T/2 is the identity of underline(Z/3)."""
    composite = compose(rank_map(3), half_transfer_section(3))

    assert composite.same_maps(identity_morphism(underline_of_ring(zmod(3))))


def test_half_transfer_needs_odd_modulus():
    """T/2 needs 2 to be invertible."""
    with pytest.raises(EvenModulus):
        half_transfer_section(4)


def test_compose_checks_endpoints():
    """Morphisms compose only head to tail."""
    with pytest.raises(ValueError):
        compose(half_transfer_section(3), half_transfer_section(3))


def test_tambara_forget():
    """Forgetting Z/5 to its Hermitian structure acts through the norm a·w(a)."""
    h = tambara_forget(underline_tambara(zmod(5)), "Z5-from-norm")

    assert check_hermitian_axioms(h).passed
    assert h.act((2,), (1,)) == (4,)
    assert str(h) == "Z5-from-norm"


def test_wrong_action_breaks_sum_formula(z3):
    """a·b := ab on underline(Z/3) misses the cross term tr(a·b·a') of the sum formula."""
    wrong = dataclasses.replace(
        z3,
        action=ActionTable(z3.under, z3.fix, rule=lambda a, b: (a[0] * b[0],)),
        tambara=None,
        name="underline(Z/3) with a·b = ab",
    )
    report = check_hermitian_axioms(wrong)
    results = {r.name: r for r in report.results}

    assert not report.passed
    sum_formula = results["(iv) (a+a')·b = a·b + a'·b + tr(a·res(b)·w(a'))"]
    assert not sum_formula.passed
    assert sum_formula.witness is not None
    assert results["(iv) 0·b = 0"].passed
