"""Unnormalized chain complexes of semi-simplicial sets and their homology."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from exactalg import CheckReport, PresentedGroup, integer_kernel, sparse_invariant_factors
from exactalg.errors import TruncationTooShallow
from exactalg.snf import IntegerSolver
from realnerve.ssets import SemiSimplicialSet, SimplicialMap

logger = logging.getLogger("hermackey.nerve")

SparseRows = list[dict[int, int]]


@dataclass(frozen=True)
class Coefficients:
    kind: str = "z"
    prime: int | None = None

    @classmethod
    def parse(cls, text: str) -> Coefficients:
        """``z``, ``q`` or ``zp:P`` with P prime."""
        value = text.strip().lower()
        if value in ("z", "q"):
            return cls(value)
        if value.startswith("zp:"):
            try:
                p = int(value[3:])
            except ValueError:
                raise ValueError(f"bad prime in coefficients {text!r}") from None
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise ValueError(f"{p} is not prime")
            return cls("zp", p)
        raise ValueError(f"unknown coefficients {text!r}; expected z, q or zp:P")

    def __str__(self) -> str:
        return {"z": "Z", "q": "Q"}.get(self.kind, f"Z/{self.prime}")


@dataclass
class ChainComplex:
    """``boundaries[p]`` has one row per p-simplex listing its faces with signs."""

    space: SemiSimplicialSet
    top: int
    boundaries: dict[int, SparseRows] = field(default_factory=dict)
    _factors: dict[int, list[int]] = field(default_factory=dict, repr=False)

    def dimension(self, p: int) -> int:
        return len(self.space.simplices(p))

    def boundary(self, p: int) -> SparseRows:
        if p not in self.boundaries:
            self.boundaries[p] = _boundary_rows(self.space, p)
        return self.boundaries[p]

    def invariant_factors(self, p: int) -> list[int]:
        if p <= 0:
            return []
        if p not in self._factors:
            self._factors[p] = sparse_invariant_factors(self.boundary(p))
            logger.debug("%s: ∂%d has rank %d", self.space, p, len(self._factors[p]))
        return self._factors[p]

    def dense_boundary(self, p: int) -> list[list[int]]:
        """``∂_p`` as a matrix acting on column vectors of p-chains."""
        rows = self.boundary(p)
        out = [[0] * len(rows) for _ in range(self.dimension(p - 1))]
        for j, row in enumerate(rows):
            for i, c in row.items():
                out[i][j] = c
        return out


def _boundary_rows(x: SemiSimplicialSet, p: int) -> SparseRows:
    if p == 0:
        return [{} for _ in x.simplices(0)]
    index = x.index(p - 1)
    rows = []
    for s in x.simplices(p):
        row: dict[int, int] = {}
        for i in range(p + 1):
            k = index[x.face(p, i, s)]
            row[k] = row.get(k, 0) + (-1 if i % 2 else 1)
        rows.append({k: c for k, c in row.items() if c})
    return rows


def chain_complex(x: SemiSimplicialSet, top: int | None = None) -> ChainComplex:
    top = x.truncation if top is None else top
    if top > x.truncation:
        raise TruncationTooShallow(f"{x} is truncated at {x.truncation}, asked for {top}")
    return ChainComplex(x, top)


def check_boundary_squared(cc: ChainComplex) -> CheckReport:
    """``∂_{p-1} ∂_p = 0`` exactly."""
    report = CheckReport(f"∂∘∂ = 0 on {cc.space}")
    for p in range(2, cc.top + 1):
        lower = cc.boundary(p - 1)

        def problem(item, lower=lower, p=p):
            k, row = item
            total: dict[int, int] = {}
            for j, c in row.items():
                for i, d in lower[j].items():
                    total[i] = total.get(i, 0) + c * d
            if any(total.values()):
                return f"degree {p}: ∂∂ of simplex {cc.space.simplices(p)[k]} is nonzero"
            return None

        report.verify(f"degree {p}", enumerate(cc.boundary(p)), problem)
    return report


def homology(
    x: SemiSimplicialSet,
    truncation: int | None = None,
    coefficients: Coefficients | str = "z",
) -> list[PresentedGroup]:
    """``H_0 .. H_{T-1}``; degree T is never reported since it needs chains in degree T+1."""
    coeffs = Coefficients.parse(coefficients) if isinstance(coefficients, str) else coefficients
    cc = chain_complex(x, truncation)
    groups = []
    for k in range(cc.top):
        below = cc.invariant_factors(k)
        above = cc.invariant_factors(k + 1)
        dim = cc.dimension(k)
        if coeffs.kind == "zp":
            p = coeffs.prime
            rank = dim - sum(1 for d in below if d % p) - sum(1 for d in above if d % p)
            groups.append(PresentedGroup(0, (p,) * rank))
            continue
        free = dim - len(below) - len(above)
        torsion = tuple(d for d in above if d > 1) if coeffs.kind == "z" else ()
        groups.append(PresentedGroup(free, torsion))
    logger.info(
        "homology of %s with %s coefficients: %s",
        x, coeffs, ", ".join(homology_notation(g, coeffs) for g in groups),
    )
    return groups


def homology_notation(group: PresentedGroup, coefficients: Coefficients | str = "z") -> str:
    coeffs = Coefficients.parse(coefficients) if isinstance(coefficients, str) else coefficients
    if coeffs.kind == "q":
        r = group.free_rank
        return "0" if r == 0 else ("Q" if r == 1 else f"Q^{r}")
    if coeffs.kind == "zp":
        r = len(group.torsion)
        return "0" if r == 0 else (f"Z/{coeffs.prime}" if r == 1 else f"(Z/{coeffs.prime})^{r}")
    return group.notation


def induces_identity_on_homology(f: SimplicialMap, k: int) -> bool:
    """True when ``f - id`` sends every integral k-cycle of the source to a boundary.

    The target must have the same simplices as the source in degrees k and k+1.
    """
    x = f.source
    if k + 1 > f.truncation:
        raise TruncationTooShallow(f"{f} is defined through level {f.truncation}, need {k + 1}")
    cc = chain_complex(x, k + 1)
    index = x.index(k)
    n = cc.dimension(k)
    if k == 0:
        cycles = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    else:
        cycles = integer_kernel(cc.dense_boundary(k), n)
    solver = IntegerSolver(cc.dense_boundary(k + 1), cc.dimension(k + 1))
    simplices = x.simplices(k)
    for z in cycles:
        diff = [-c for c in z]
        for j, c in enumerate(z):
            if c:
                diff[index[f(k, simplices[j])]] += c
        if any(diff) and solver.solve(diff) is None:
            logger.debug("%s: cycle %s is moved off its homology class", f, z)
            return False
    return True
