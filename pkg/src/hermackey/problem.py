"""Input documents: pydantic models, parsing with positions, and construction of the objects."""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Annotated, Literal, get_args

import pydantic
import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from constructions import group_mackey, matrix_mackey
from exactalg import FinAbGroup, FinGroup, FinRingInv, GroupHom, group_algebra, matrix_ring, zmod
from exactalg.errors import HermackeyError, ParseError, UnknownReference, ValidationError
from exactalg.rings import check_anti_involution, check_ring_axioms
from hermackey.registry import Registry, builtin_registry
from mackey import (
    ActionTable,
    HermMackey,
    HermMorphism,
    MackeyZ2,
    TambaraZ2,
    burnside_mod,
    burnside_tambara,
    compose,
    identity_morphism,
    tambara_forget,
    underline_of_ring,
    underline_tambara,
)
from mackey.rank import half_transfer_section, rank_map
from realnerve import MonoidAI

logger = logging.getLogger("hermackey.problem")

Command = Literal[
    "check-axioms",
    "classify-forms",
    "kh0",
    "witt0",
    "induced-map",
    "nerve-homology",
    "fixed-iso-check",
    "involution-classes",
    "lambda-check",
]
COMMANDS: tuple[str, ...] = get_args(Command)
NerveKind = Literal[
    "real", "dihedral", "sd-real", "sd-dihedral", "sym", "symcy", "sigma-fixed", "di-fixed", "group"
]
Matrix = list[list[int]]


class _Declaration(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str


class GroupDecl(_Declaration):
    """A multiplication table (flat or nested), generating permutations, or a catalog name."""

    kind: Literal["group"]
    table: list[int] | Matrix | None = None
    labels: list[str] = []
    generators: Matrix | None = None
    catalog: str | None = None

    @model_validator(mode="after")
    def _one_source(self) -> GroupDecl:
        given = [x is not None for x in (self.table, self.generators, self.catalog)]
        if sum(given) != 1:
            raise ValueError("give exactly one of table, generators or catalog")
        return self


class RingDecl(_Declaration):
    kind: Literal["ring"]
    builder: Literal["zmod", "matrix", "group_algebra", "raw"] = "raw"
    m: int | None = None
    base: str | None = None
    n: int | None = None
    group: str | None = None
    tau: list[int] | None = None
    orders: list[int] | None = None
    constants: list[Matrix] | None = None
    one: list[int] | None = None
    involution: Matrix | None = None


class ActionEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: list[int]
    matrix: Matrix


class MackeyDecl(_Declaration):
    kind: Literal["mackey"]
    builder: Literal["underline", "burnside_mod", "matrix", "group", "tambara", "raw"]
    m: int | None = None
    ring: str | None = None
    base: str | None = None
    n: int | None = None
    group: str | None = None
    tau: list[int] | None = None
    section: list[int] | None = None
    order: list[int] | None = None
    tambara: str | None = None
    under: list[int] | None = None
    fix: list[int] | None = None
    w: Matrix | None = None
    res: Matrix | None = None
    tr: Matrix | None = None
    action: list[ActionEntry] | None = None
    fix_unit: list[int] | None = None


class TambaraDecl(_Declaration):
    kind: Literal["tambara"]
    builder: Literal["burnside", "underline"]
    m: int | None = None
    ring: str | None = None


class MorphismDecl(_Declaration):
    kind: Literal["morphism"]
    builder: Literal["rank", "half", "identity", "compose", "raw"]
    m: int | None = None
    group: str | None = None
    mackey: str | None = None
    first: str | None = None
    second: str | None = None
    source: str | None = None
    target: str | None = None
    f_under: Matrix | None = None
    f_fix: Matrix | None = None
    unital: bool = True


class MonoidDecl(_Declaration):
    kind: Literal["monoid"]
    group: str | None = None
    tau: list[int] | None = None
    table: Matrix | None = None
    involution: list[int] | None = None
    labels: list[str] = []


Declaration = Annotated[
    GroupDecl | RingDecl | MackeyDecl | TambaraDecl | MorphismDecl | MonoidDecl,
    Field(discriminator="kind"),
]


REQUIRED_FLAGS: dict[str, tuple[str, ...]] = {
    "check-axioms": ("mackey", "morphism"),
    "classify-forms": ("mackey",),
    "kh0": ("mackey",),
    "witt0": ("mackey",),
    "induced-map": ("morphism",),
    "nerve-homology": ("monoid", "group"),
    "fixed-iso-check": ("monoid", "group"),
    "involution-classes": ("group",),
    "lambda-check": ("group",),
}


class TaskSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Command
    mackey: str | None = None
    group: str | None = None
    morphism: str | None = None
    monoid: str | None = None
    nerve: NerveKind | None = None
    n: int | None = Field(default=None, ge=1)
    dim_bound: int | None = Field(default=None, ge=1)
    trunc: int | None = Field(default=None, ge=1)
    coeff: str | None = None
    seed: int | None = None
    method: Literal["generators", "exhaustive"] = "generators"

    @model_validator(mode="after")
    def _required_flags(self) -> TaskSpec:
        names = REQUIRED_FLAGS[self.command]
        if self.command == "nerve-homology" and self.nerve == "group":
            names = ("group",)
        if not any(getattr(self, name) for name in names):
            raise ValueError(f"{self.command} needs " + " or ".join(f"--{n}" for n in names))
        return self

    def echo(self) -> str:
        parts = [self.command]
        for key, value in self.model_dump(exclude_none=True, exclude={"command"}).items():
            if key == "method" and value == "generators":
                continue
            parts.append(f"--{key.replace('_', '-')} {value}")
        return " ".join(parts)


class ProblemDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    declarations: list[Declaration] = []
    tasks: list[TaskSpec] = []


def _load_text(text: str, fmt: str | None) -> object:
    stripped = text.lstrip()
    if fmt == "json" or (fmt is None and stripped[:1] in ("{", "[")):
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno) from None
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        problem = getattr(e, "problem", None) or str(e)
        if mark is None:
            raise ParseError(problem) from None
        raise ParseError(problem, mark.line + 1, mark.column + 1) from None


def parse_input(text: str, fmt: str | None = None) -> ProblemDocument:
    """Parse a JSON or YAML document into a validated :class:`ProblemDocument`.

    A bare list is read as declarations, a bare object with ``kind`` as one declaration.
    """
    data = _load_text(text, fmt)
    if data is None:
        data = {}
    if isinstance(data, list):
        data = {"declarations": data}
    elif isinstance(data, dict) and "kind" in data:
        data = {"declarations": [data]}
    if not isinstance(data, dict):
        raise ParseError("a problem document must be an object or a list")
    try:
        return ProblemDocument.model_validate(data)
    except pydantic.ValidationError as e:
        err = e.errors()[0]
        loc = ".".join(str(p) for p in err["loc"])
        raise ValidationError(f"{loc}: {err['msg']}", invariant=loc) from None


def load_problem(path: str | Path) -> ProblemDocument:
    path = Path(path)
    fmt = {".json": "json", ".yaml": "yaml", ".yml": "yaml"}.get(path.suffix.lower())
    document = parse_input(path.read_text(encoding="utf-8"), fmt)
    logger.info(
        "loaded %s: %d declarations, %d tasks",
        path, len(document.declarations), len(document.tasks),
    )
    return document


def _need(decl: _Declaration, **fields: object) -> None:
    missing = [k for k, v in fields.items() if v is None]
    if missing:
        raise ValidationError(
            f"{decl.name}: missing {', '.join(missing)}", invariant="required-fields"
        )


def _hom(source: FinAbGroup, target: FinAbGroup, rows: Matrix, label: str) -> GroupHom:
    try:
        return GroupHom(source, target, tuple(tuple(r) for r in rows))
    except ValueError as e:
        raise ValidationError(f"{label}: {e}", invariant="shape") from None


def _build_group(d: GroupDecl, reg: Registry) -> FinGroup:
    if d.catalog is not None:
        return reg.group(d.catalog)
    if d.generators is not None:
        return FinGroup.from_permutations(d.generators, d.name)
    table = d.table
    if table and isinstance(table[0], int):
        n = math.isqrt(len(table))
        if n * n != len(table):
            raise ValidationError(
                f"{d.name}: {len(table)} table entries is not a square", invariant="square-table"
            )
        table = [table[i * n:(i + 1) * n] for i in range(n)]
    return FinGroup.from_table(table, d.labels, d.name)


def _build_ring(d: RingDecl, reg: Registry) -> FinRingInv:
    if d.builder == "zmod":
        _need(d, m=d.m)
        return zmod(d.m)
    if d.builder == "matrix":
        _need(d, base=d.base, n=d.n)
        return matrix_ring(reg.ring(d.base), d.n)
    if d.builder == "group_algebra":
        _need(d, base=d.base, group=d.group)
        return group_algebra(reg.ring(d.base), reg.group(d.group), d.tau)
    _need(d, orders=d.orders, constants=d.constants, one=d.one, involution=d.involution)
    additive = FinAbGroup(tuple(d.orders))
    w = _hom(additive, additive, d.involution, f"{d.name} involution")
    constants = tuple(tuple(tuple(v) for v in row) for row in d.constants)
    ring = FinRingInv(additive, constants, tuple(d.one), w, d.name)
    for report in (check_ring_axioms(ring), check_anti_involution(ring)):
        failure = report.first_failure
        if failure is not None:
            raise ValidationError(f"{d.name}: {failure.name}: {failure.witness}", failure.name)
    return ring


def _build_raw_mackey(d: MackeyDecl, reg: Registry) -> HermMackey:
    _need(d, ring=d.ring, under=d.under, fix=d.fix, w=d.w, res=d.res, tr=d.tr, action=d.action)
    ring = reg.ring(d.ring)
    under, fix = FinAbGroup(tuple(d.under)), FinAbGroup(tuple(d.fix))
    base = MackeyZ2(
        under,
        fix,
        _hom(under, under, d.w, "w"),
        _hom(fix, under, d.res, "res"),
        _hom(under, fix, d.tr, "tr"),
        d.name,
    )
    table = {under.reduce(e.a): _hom(fix, fix, e.matrix, f"action of {e.a}") for e in d.action}
    if len(table) != under.size:
        raise ValidationError(
            f"{d.name}: action lists {len(table)} of {under.size} elements", invariant="action"
        )
    fix_unit = None if d.fix_unit is None else fix.reduce(d.fix_unit)
    return HermMackey(base, ring, ActionTable(under, fix, table=table), fix_unit, name=d.name)


def _build_mackey(d: MackeyDecl, reg: Registry) -> HermMackey:
    if d.builder == "underline":
        _need(d, ring=d.ring)
        return underline_of_ring(reg.ring(d.ring))
    if d.builder == "burnside_mod":
        _need(d, m=d.m)
        return burnside_mod(d.m)
    if d.builder == "matrix":
        _need(d, base=d.base, n=d.n)
        return matrix_mackey(reg.mackey(d.base), d.n)
    if d.builder == "group":
        _need(d, base=d.base, group=d.group)
        return group_mackey(
            reg.mackey(d.base),
            reg.group(d.group),
            None if d.tau is None else tuple(d.tau),
            None if d.section is None else tuple(d.section),
            tuple(d.order or ()),
        )
    if d.builder == "tambara":
        _need(d, tambara=d.tambara)
        return tambara_forget(reg.tambara(d.tambara), d.name)
    return _build_raw_mackey(d, reg)


def _build_tambara(d: TambaraDecl, reg: Registry) -> TambaraZ2:
    if d.builder == "burnside":
        _need(d, m=d.m)
        return burnside_tambara(d.m)
    _need(d, ring=d.ring)
    return underline_tambara(reg.ring(d.ring))


def _build_morphism(d: MorphismDecl, reg: Registry) -> HermMorphism:
    group = None if d.group is None else reg.group(d.group)
    if d.builder == "rank":
        _need(d, m=d.m)
        return rank_map(d.m, group)
    if d.builder == "half":
        _need(d, m=d.m)
        return half_transfer_section(d.m, group)
    if d.builder == "identity":
        _need(d, mackey=d.mackey)
        return identity_morphism(reg.mackey(d.mackey))
    if d.builder == "compose":
        _need(d, first=d.first, second=d.second)
        return compose(reg.morphism(d.second), reg.morphism(d.first))
    _need(d, source=d.source, target=d.target, f_under=d.f_under, f_fix=d.f_fix)
    s, t = reg.mackey(d.source), reg.mackey(d.target)
    return HermMorphism(
        s,
        t,
        _hom(s.under, t.under, d.f_under, "f_under"),
        _hom(s.fix, t.fix, d.f_fix, "f_fix"),
        d.unital,
        d.name,
    )


def _build_monoid(d: MonoidDecl, reg: Registry) -> MonoidAI:
    if d.group is not None:
        return MonoidAI.from_group(reg.group(d.group), d.tau)
    _need(d, table=d.table, involution=d.involution)
    return MonoidAI(
        tuple(tuple(r) for r in d.table), tuple(d.involution), tuple(d.labels), d.name
    )


_BUILDERS = {
    "group": _build_group,
    "ring": _build_ring,
    "mackey": _build_mackey,
    "tambara": _build_tambara,
    "morphism": _build_morphism,
    "monoid": _build_monoid,
}


def build_declaration(decl: _Declaration, reg: Registry) -> object:
    try:
        return _BUILDERS[decl.kind](decl, reg)
    except (ValidationError, UnknownReference):
        raise
    except (HermackeyError, TypeError) as e:
        raise ValidationError(f"{decl.kind} {decl.name}: {e}", invariant=type(e).__name__) from e


def build_registry(document: ProblemDocument, registry: Registry | None = None) -> Registry:
    """Construct every declaration in order on top of the built-in catalog."""
    reg = registry or builtin_registry()
    for decl in document.declarations:
        reg.add(decl.kind, decl.name, build_declaration(decl, reg))
        logger.debug("built %s %s", decl.kind, decl.name)
    return reg


def dump_group(g: FinGroup, name: str) -> GroupDecl:
    return GroupDecl(
        kind="group", name=name, table=[list(r) for r in g.table], labels=list(g.labels)
    )


def dump_ring(r: FinRingInv, name: str) -> RingDecl:
    return RingDecl(
        kind="ring",
        name=name,
        orders=list(r.additive.orders),
        constants=[[list(c) for c in row] for row in r.constants],
        one=list(r.one),
        involution=[list(row) for row in r.w.matrix],
    )


def dump_mackey(h: HermMackey, name: str, ring_name: str) -> MackeyDecl:
    """Raw tables of h; the action is tabulated over every underlying element."""
    b = h.base
    return MackeyDecl(
        kind="mackey",
        name=name,
        builder="raw",
        ring=ring_name,
        under=list(b.under.orders),
        fix=list(b.fix.orders),
        w=[list(row) for row in b.w.matrix],
        res=[list(row) for row in b.res.matrix],
        tr=[list(row) for row in b.tr.matrix],
        action=[
            ActionEntry(a=list(a), matrix=[list(row) for row in hom.matrix])
            for a, hom in h.action.tabulate().items()
        ],
        fix_unit=None if h.fix_unit is None else list(h.fix_unit),
    )


def dump_monoid(m: MonoidAI, name: str) -> MonoidDecl:
    return MonoidDecl(
        kind="monoid",
        name=name,
        table=[list(r) for r in m.table],
        involution=list(m.w),
        labels=list(m.labels),
    )


def dump_document(document: ProblemDocument) -> str:
    return document.model_dump_json(indent=2, exclude_none=True)
