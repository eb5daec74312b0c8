"""Named algebraic objects: the built-in catalog plus declarations from input documents."""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

from constructions import group_mackey, matrix_mackey
from exactalg import FinGroup, FinRingInv, catalog_groups, matrix_ring, zmod
from exactalg.errors import UnknownReference
from mackey import (
    HermMackey,
    HermMorphism,
    TambaraZ2,
    burnside_mod,
    burnside_tambara,
    underline_of_ring,
    underline_tambara,
)
from mackey.rank import half_transfer_section, rank_map
from realnerve import MonoidAI, monoid_catalog

logger = logging.getLogger("hermackey.registry")

KINDS = ("ring", "group", "mackey", "tambara", "morphism", "monoid")

RING_NAMES = {"Z3": 3, "Z4": 4, "Z5": 5, "Z9": 9}


class Registry:
    """One namespace per kind; built-in entries are constructed on first lookup."""

    def __init__(self):
        self._objects: dict[str, dict[str, Any]] = {k: {} for k in KINDS}
        self._factories: dict[str, dict[str, Callable[[], Any]]] = {k: {} for k in KINDS}

    def add(self, kind: str, name: str, obj: Any) -> None:
        if name in self._objects[kind]:
            logger.info("declaration %s %r replaces an earlier entry", kind, name)
        self._objects[kind][name] = obj
        self._factories[kind].pop(name, None)

    def add_factory(self, kind: str, name: str, factory: Callable[[], Any]) -> None:
        self._factories[kind][name] = factory

    def get(self, kind: str, name: str) -> Any:
        if name in self._objects[kind]:
            return self._objects[kind][name]
        factory = self._factories[kind].get(name)
        if factory is None:
            known = ", ".join(self.names(kind)) or "none"
            raise UnknownReference(f"unknown {kind} {name!r}; known: {known}")
        obj = factory()
        self._objects[kind][name] = obj
        return obj

    def has(self, kind: str, name: str) -> bool:
        return name in self._objects[kind] or name in self._factories[kind]

    def names(self, kind: str) -> list[str]:
        return sorted(set(self._objects[kind]) | set(self._factories[kind]))

    def ring(self, name: str) -> FinRingInv:
        return self.get("ring", name)

    def group(self, name: str) -> FinGroup:
        return self.get("group", name)

    def mackey(self, name: str) -> HermMackey:
        return self.get("mackey", name)

    def tambara(self, name: str) -> TambaraZ2:
        return self.get("tambara", name)

    def morphism(self, name: str) -> HermMorphism:
        return self.get("morphism", name)

    def monoid(self, name: str) -> MonoidAI:
        """Declared monoids, or any group under inversion."""
        if self.has("monoid", name):
            return self.get("monoid", name)
        if self.has("group", name):
            return MonoidAI.from_group(self.group(name))
        raise UnknownReference(f"unknown monoid or group {name!r}")


def builtin_registry() -> Registry:
    reg = Registry()
    groups = catalog_groups()
    for name, group in groups.items():
        reg.add("group", name, group)
    for name, m in RING_NAMES.items():
        reg.add_factory("ring", name, lambda m=m: zmod(m))
        reg.add_factory("mackey", f"underline-{name}", lambda m=m: underline_of_ring(zmod(m)))
    reg.add_factory("ring", "M2Z3", lambda: matrix_ring(zmod(3), 2))
    reg.add_factory("mackey", "underline-M2Z3", lambda: underline_of_ring(matrix_ring(zmod(3), 2)))
    for m in (3, 5):
        reg.add_factory("mackey", f"A{m}", lambda m=m: burnside_mod(m))
        reg.add_factory("tambara", f"TA{m}", lambda m=m: burnside_tambara(m))
        reg.add_factory("tambara", f"TZ{m}", lambda m=m: underline_tambara(zmod(m)))
        reg.add_factory("morphism", f"d{m}", lambda m=m: rank_map(m))
        reg.add_factory("morphism", f"half{m}", lambda m=m: half_transfer_section(m))
        reg.add_factory(
            "mackey", f"M2-underline-Z{m}", lambda m=m: matrix_mackey(underline_of_ring(zmod(m)), 2)
        )
        reg.add_factory("mackey", f"M2-A{m}", lambda m=m: matrix_mackey(burnside_mod(m), 2))
        for gname in ("C2", "C3", "S3"):
            group = groups[gname]
            reg.add_factory(
                "mackey",
                f"underline-Z{m}[{gname}]",
                lambda m=m, g=group: group_mackey(underline_of_ring(zmod(m)), g),
            )
            reg.add_factory(
                "mackey", f"A{m}[{gname}]", lambda m=m, g=group: group_mackey(burnside_mod(m), g)
            )
        reg.add_factory("morphism", f"d{m}[C2]", lambda m=m: rank_map(m, groups["C2"]))
        reg.add_factory(
            "morphism", f"half{m}[C2]", lambda m=m: half_transfer_section(m, groups["C2"])
        )
    for name, monoid in monoid_catalog().items():
        if name not in groups:
            reg.add("monoid", name, monoid)
    return reg
