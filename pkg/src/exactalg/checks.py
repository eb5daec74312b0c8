"""Verification reports shared by all axiom checkers."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import TypeVar

T = TypeVar("T")


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    witness: str | None = None


@dataclass
class CheckReport:
    """Outcome of a verification suite; ``bool(report)`` is True iff every check passed."""

    subject: str
    results: list[CheckResult] = field(default_factory=list)
    mode: str = "exhaustive"
    seed: int | None = None
    samples: int | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def first_failure(self) -> CheckResult | None:
        return next((r for r in self.results if not r.passed), None)

    def add(self, name: str, passed: bool, checked: int = 1, witness: str | None = None) -> bool:
        self.results.append(CheckResult(name, passed, checked, witness))
        return passed

    def verify(self, name: str, cases: Iterable[T], problem: Callable[[T], str | None]) -> bool:
        """Run ``problem`` on each case; the first non-None answer is the witness."""
        count = 0
        for case in cases:
            count += 1
            witness = problem(case)
            if witness is not None:
                return self.add(name, False, count, witness)
        return self.add(name, True, count)

    def merge(self, other: CheckReport, prefix: str = "") -> None:
        for r in other.results:
            self.results.append(CheckResult(prefix + r.name, r.passed, r.checked, r.witness))
        if other.mode == "sampled":
            self.mode, self.seed, self.samples = other.mode, other.seed, other.samples

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.subject}: {status} ({self.mode})"]
        if self.mode == "sampled":
            sampled = f"sampled, seed={self.seed}, samples={self.samples}"
            lines[0] = f"{self.subject}: {status} ({sampled})"
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            line = f"  [{mark}] {r.name} ({r.checked} checked)"
            if r.witness:
                line += f": {r.witness}"
            lines.append(line)
        return "\n".join(lines)
