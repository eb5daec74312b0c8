"""Report models and rendering; emitted documents are the JSON dump of :class:`Report`."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel

from exactalg import CheckReport


class CheckLine(BaseModel):
    name: str
    passed: bool
    checked: int = 0
    witness: str | None = None


class ValueLine(BaseModel):
    label: str
    value: str


class TaskResult(BaseModel):
    command: str
    subject: str = ""
    passed: bool = True
    values: list[ValueLine] = []
    checks: list[CheckLine] = []
    headers: list[str] = []
    rows: list[list[str]] = []
    mode: str = "exhaustive"
    seed: int | None = None
    samples: int | None = None
    error: str | None = None
    seconds: float | None = None

    def value(self, label: str, value: object) -> None:
        self.values.append(ValueLine(label=label, value=str(value)))

    def absorb(self, report: CheckReport, prefix: str = "") -> None:
        for r in report.results:
            self.checks.append(
                CheckLine(
                    name=prefix + r.name, passed=r.passed, checked=r.checked, witness=r.witness
                )
            )
        if report.mode == "sampled":
            self.mode, self.seed, self.samples = report.mode, report.seed, report.samples
        self.passed = self.passed and report.passed

    def check(self, name: str, passed: bool, witness: str | None = None) -> None:
        self.checks.append(CheckLine(name=name, passed=passed, checked=1, witness=witness))
        self.passed = self.passed and passed


class Report(BaseModel):
    command: str
    input: str | None = None
    tasks: list[TaskResult] = []
    passed: bool = True
    error: str | None = None

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return 2
        return 0 if self.passed else 1


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  " + "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def render_task(result: TaskResult) -> str:
    lines = [f"== {result.command} =="]
    if result.subject:
        lines.append(result.subject)
    if result.error is not None:
        lines.append(f"ERROR: {result.error}")
    for v in result.values:
        lines.append(f"{v.label} = {v.value}")
    if result.headers:
        lines.extend(_table(result.headers, result.rows))
    for c in result.checks:
        mark = "PASS" if c.passed else "FAIL"
        line = f"  [{mark}] {c.name} ({c.checked} checked)"
        if c.witness:
            line += f": {c.witness}"
        lines.append(line)
    if result.mode == "sampled":
        lines.append(f"sampled verification: seed={result.seed}, samples={result.samples}")
    if result.seconds is not None:
        lines.append(f"time: {result.seconds:.3f}s")
    return "\n".join(lines)


def render_report(report: Report) -> str:
    if report.error is not None:
        return f"hermackey {report.command}\nERROR: {report.error}\n"
    parts = [f"hermackey {report.command}" + (f" ({report.input})" if report.input else "")]
    parts.extend(render_task(t) for t in report.tasks)
    failed = sum(1 for t in report.tasks if not t.passed)
    status = "all PASS" if failed == 0 else f"{failed} FAIL"
    parts.append(f"{len(report.tasks)} task(s), {status}")
    return "\n\n".join(parts) + "\n"


def emit_report(report: Report, path: str | Path) -> None:
    Path(path).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
