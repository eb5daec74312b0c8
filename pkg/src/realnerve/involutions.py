"""Conjugacy classes of involutions and their centralizers."""

from __future__ import annotations

from dataclasses import dataclass

from exactalg import FinGroup


@dataclass(frozen=True)
class InvolutionClass:
    representative: int
    size: int
    centralizer: FinGroup

    def label(self, group: FinGroup) -> str:
        return group.label(self.representative)


def involution_classes(group: FinGroup) -> list[InvolutionClass]:
    """One entry per conjugacy class of g with g² = 1, identity first.

    Representatives are the smallest element index of each class.
    """
    e = group.identity
    out = []
    for cls in group.conjugacy_classes():
        g = cls[0]
        if group.mul(g, g) != e:
            continue
        name = f"Z({group.label(g)})"
        out.append(InvolutionClass(g, len(cls), group.subgroup(group.centralizer(g), name)))
    return sorted(out, key=lambda c: (c.representative != e, c.representative))
