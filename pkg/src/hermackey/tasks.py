"""One handler per command; each turns a :class:`TaskSpec` into a :class:`TaskResult`."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass

from exactalg import GroupHom
from exactalg.errors import ValidationError
from hermackey.config import Settings
from hermackey.problem import TaskSpec
from hermackey.registry import Registry
from hermackey.report import TaskResult
from hermforms import enumerate_iso_classes, induced_kh0_map, kh0, witt0
from mackey import (
    HermMackey,
    HermMorphism,
    check_herm_morphism,
    check_hermitian_axioms,
    check_tambara_axioms,
    compose,
)
from realnerve import (
    Coefficients,
    FixedSimplices,
    SemiSimplicialSet,
    chain_complex,
    check_boundary_squared,
    check_di_fixed_iso,
    check_sigma_fixed_iso,
    component_sset,
    connected_components,
    dihedral_nerve,
    first_half_map,
    fixed_inclusion,
    group_nerve,
    homology,
    homology_notation,
    induces_identity_on_homology,
    involution_classes,
    lambda_map,
    level_counts,
    real_nerve,
    subdivided_dihedral,
    subdivided_real,
    sym_nerve,
    symcy_nerve,
)

logger = logging.getLogger("hermackey.tasks")


@dataclass(frozen=True)
class TaskContext:
    registry: Registry
    settings: Settings
    seed: int
    dim_bound: int
    trunc: int
    coeff: Coefficients

    @classmethod
    def build(cls, task: TaskSpec, registry: Registry, settings: Settings) -> TaskContext:
        return cls(
            registry,
            settings,
            settings.seed if task.seed is None else task.seed,
            task.dim_bound or settings.dim_bound,
            task.trunc or settings.trunc,
            Coefficients.parse(task.coeff or settings.coeff),
        )


def _need(value: str | None, flag: str, command: str) -> str:
    if not value:
        raise ValidationError(f"{command} needs --{flag}", invariant="missing-argument")
    return value


def _mackey(task: TaskSpec, ctx: TaskContext) -> HermMackey:
    return ctx.registry.mackey(_need(task.mackey, "mackey", task.command))


def _morphism(task: TaskSpec, ctx: TaskContext) -> HermMorphism:
    """Comma-separated names compose left to right: ``a,b`` is ``b ∘ a``."""
    names = _need(task.morphism, "morphism", task.command).split(",")
    f = ctx.registry.morphism(names[0].strip())
    for name in names[1:]:
        f = compose(ctx.registry.morphism(name.strip()), f)
    return f


def _limit(x: SemiSimplicialSet, max_simplices: int) -> SemiSimplicialSet:
    node: object = x
    while isinstance(node, SemiSimplicialSet):
        node.max_simplices = max_simplices
        node = getattr(node, "base", None) or getattr(node, "parent", None)
    return x


def _space(task: TaskSpec, ctx: TaskContext) -> SemiSimplicialSet:
    kind = task.nerve or "real"
    t = ctx.trunc
    if kind == "group":
        group = ctx.registry.group(_need(task.group, "group", task.command))
        x: SemiSimplicialSet = group_nerve(group, t)
    else:
        name = task.monoid or _need(task.group, "monoid", task.command)
        m = ctx.registry.monoid(name)
        builders: dict[str, Callable[[], SemiSimplicialSet]] = {
            "real": lambda: real_nerve(m, t),
            "dihedral": lambda: dihedral_nerve(m, t),
            "sd-real": lambda: subdivided_real(m, t),
            "sd-dihedral": lambda: subdivided_dihedral(m, t),
            "sym": lambda: sym_nerve(m, t),
            "symcy": lambda: symcy_nerve(m, t),
            "sigma-fixed": lambda: FixedSimplices(subdivided_real(m, t)),
            "di-fixed": lambda: FixedSimplices(subdivided_dihedral(m, t)),
        }
        x = builders[kind]()
    return _limit(x, ctx.settings.max_simplices)


def check_axioms(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    s = ctx.settings
    if task.morphism:
        f = _morphism(task, ctx)
        result.subject = f"morphism {f}: {f.source} → {f.target}"
        result.absorb(check_herm_morphism(f))
        return
    h = _mackey(task, ctx)
    result.subject = f"Hermitian Mackey functor {h}"
    result.absorb(check_hermitian_axioms(h, s.budget, s.samples, ctx.seed))
    if h.tambara is not None:
        result.absorb(check_tambara_axioms(h.tambara, s.budget, ctx.seed), "tambara: ")


def classify_forms(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    h = _mackey(task, ctx)
    n = task.n or 1
    s = ctx.settings
    c = enumerate_iso_classes(h, n, task.method, s.max_elements, s.max_group)
    result.subject = f"{n}-dimensional Hermitian forms over {h} ({task.method})"
    result.value("classes", len(c))
    result.value("forms", c.total_forms)
    result.headers = ["#", "representative", "size"]
    result.rows = [[str(i), str(cls.representative), str(cls.size)] for i, cls in enumerate(c)]


def kh0_task(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    h = _mackey(task, ctx)
    k = kh0(h, ctx.dim_bound, ctx.settings.max_elements)
    result.subject = f"KH0 of {h} from forms of dimension ≤ {ctx.dim_bound}"
    result.value("KH0", k.group.describe())
    if k.hyperbolic_class is not None:
        result.value("[H]", k.hyperbolic_class)
    if k.unit_class is not None:
        result.value("[<1>]", k.unit_class)
    result.headers = ["generator", "dim", "representative", "class"]
    for i, (n, cls) in enumerate(k.generators()):
        image = k.presentation.image(_unit(i, k.generator_count))
        result.rows.append([str(i), str(n), str(cls.representative), str(image)])


def _unit(i: int, size: int) -> list[int]:
    return [1 if j == i else 0 for j in range(size)]


def witt0_task(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    h = _mackey(task, ctx)
    w = witt0(h, ctx.dim_bound, ctx.settings.max_elements)
    result.subject = f"Witt group of {h} from forms of dimension ≤ {ctx.dim_bound}"
    result.value("W0", w.group.describe())


def induced_map(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    f = _morphism(task, ctx)
    result.absorb(check_herm_morphism(f))
    km = induced_kh0_map(f, ctx.dim_bound, ctx.settings.max_elements)
    result.subject = f"KH0({f.source}) → KH0({f.target}) induced by {f}"
    result.value("source", km.source.group.describe())
    result.value("target", km.target.group.describe())
    result.value("matrix", "; ".join(" ".join(str(v) for v in row) for row in km.hom.matrix))
    if f.source is f.target:
        result.value("identity", km.hom == GroupHom.identity(km.hom.source))
    src = km.source.generators()
    tgt = km.target.generators()
    result.headers = ["dim", "class", "image"]
    result.rows = [
        [str(src[i][0]), str(src[i][1].representative), str(tgt[j][1].representative)]
        for i, j in sorted(km.class_map.items())
    ]


def nerve_homology(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    x = _space(task, ctx)
    top = x.truncation
    result.subject = f"{x} through level {top}, {ctx.coeff} coefficients"
    result.value("simplices", ", ".join(str(c) for c in level_counts(x, top)))
    if top >= 1:
        result.value("components", len(connected_components(x)))
    result.absorb(x.check_face_identities(top))
    result.absorb(check_boundary_squared(chain_complex(x, top)))
    for k, group in enumerate(homology(x, top, ctx.coeff)):
        result.value(f"H{k}", homology_notation(group, ctx.coeff))


def fixed_iso_check(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    name = task.monoid or _need(task.group, "monoid", task.command)
    m = ctx.registry.monoid(name)
    t = ctx.trunc
    result.subject = f"fixed points of the subdivided nerves of {m} through level {t}"
    result.absorb(check_sigma_fixed_iso(m, t), "sigma: ")
    result.absorb(check_di_fixed_iso(m, t), "di: ")


def involution_classes_task(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    group = ctx.registry.group(_need(task.group, "group", task.command))
    classes = involution_classes(group)
    result.subject = f"conjugacy classes of involutions in {group}"
    result.headers = ["representative", "class size", "centralizer order", "H1(centralizer)"]
    for c in classes:
        ab = c.centralizer.abelianization().notation
        result.rows.append([c.label(group), str(c.size), str(c.centralizer.order), ab])
    m = ctx.registry.monoid(task.group or "")
    fixed = FixedSimplices(subdivided_real(m, max(ctx.trunc, 2)))
    _limit(fixed, ctx.settings.max_simplices)
    components = connected_components(fixed)
    result.check(
        "components of the fixed nerve match involution classes",
        len(components) == len(classes),
        None if len(components) == len(classes) else f"{len(components)} ≠ {len(classes)}",
    )
    for c in classes:
        comp = component_sset(fixed, (c.representative,))
        h1 = homology(comp, 2)[1]
        expected = c.centralizer.abelianization()
        result.check(
            f"H1 of the component of {c.label(group)} is {expected.notation}",
            h1.same_group(expected),
            None if h1.same_group(expected) else f"got {h1.notation}",
        )


def lambda_check(task: TaskSpec, ctx: TaskContext, result: TaskResult) -> None:
    group = ctx.registry.group(_need(task.group, "group", task.command))
    t = ctx.trunc
    lam = lambda_map(group, t)
    _limit(lam.source, ctx.settings.max_simplices)
    _limit(lam.target, ctx.settings.max_simplices)
    result.subject = f"λ: N({group}) → (sd_e N^σ {group})^Z/2 through level {t}"
    result.absorb(lam.check_simplicial())
    back = first_half_map(lam.target.parent).compose(fixed_inclusion(lam.target).compose(lam))
    for k in range(min(t, back.truncation)):
        name = f"first half ∘ inclusion ∘ λ is the identity on H{k}"
        result.check(name, induces_identity_on_homology(back, k))


HANDLERS: dict[str, Callable[[TaskSpec, TaskContext, TaskResult], None]] = {
    "check-axioms": check_axioms,
    "classify-forms": classify_forms,
    "kh0": kh0_task,
    "witt0": witt0_task,
    "induced-map": induced_map,
    "nerve-homology": nerve_homology,
    "fixed-iso-check": fixed_iso_check,
    "involution-classes": involution_classes_task,
    "lambda-check": lambda_check,
}


def run_task(task: TaskSpec, registry: Registry, settings: Settings) -> TaskResult:
    """Errors propagate; callers decide how to report them."""
    ctx = TaskContext.build(task, registry, settings)
    result = TaskResult(command=task.echo())
    logger.info("running %s", result.command)
    started = time.perf_counter()
    HANDLERS[task.command](task, ctx, result)
    result.seconds = time.perf_counter() - started
    status = "PASS" if result.passed else "FAIL"
    logger.info("%s: %s in %.3fs", result.command, status, result.seconds)
    return result
