"""Command-line front end: problem documents, the built-in catalog and report rendering."""

from hermackey.config import Settings, load_settings
from hermackey.problem import ProblemDocument, TaskSpec, build_registry, load_problem, parse_input
from hermackey.registry import Registry, builtin_registry
from hermackey.report import Report, TaskResult, render_report
from hermackey.tasks import run_task

__all__ = [
    "ProblemDocument",
    "Registry",
    "Report",
    "Settings",
    "TaskResult",
    "TaskSpec",
    "build_registry",
    "builtin_registry",
    "load_problem",
    "load_settings",
    "parse_input",
    "render_report",
    "run_task",
]
