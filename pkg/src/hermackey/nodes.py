"""PocketFlow nodes for a hermackey run.

Each node follows the pattern:
- prep(): read from the shared store
- exec(): pure computation
- post(): write to the shared store, return the action
"""

from __future__ import annotations

import logging

from pocketflow import BatchNode, Node

from exactalg.errors import HermackeyError, ParseError, UnknownReference, ValidationError
from hermackey.problem import ProblemDocument, build_registry, load_problem
from hermackey.registry import Registry
from hermackey.report import Report, TaskResult, emit_report, render_report
from hermackey.tasks import run_task

logger = logging.getLogger("hermackey.flow")

INPUT_ERRORS = (ParseError, ValidationError, UnknownReference, OSError)
TASK_ERRORS = (HermackeyError, ArithmeticError, KeyError, ValueError)


class LoadProblemNode(Node):
    """Read the input document; flag-built tasks replace its task list for single commands."""

    def prep(self, shared: dict) -> dict:
        return shared["request"]

    def exec(self, request: dict) -> ProblemDocument:
        path = request.get("input")
        document = load_problem(path) if path else ProblemDocument()
        if request["command"] != "run":
            document = document.model_copy(update={"tasks": list(request.get("tasks", []))})
        elif not document.tasks:
            raise ValidationError("the input document has no tasks", invariant="tasks")
        return document

    def exec_fallback(self, prep_res: dict, exc: Exception) -> Exception:
        if isinstance(exc, INPUT_ERRORS):
            return exc
        raise exc

    def post(self, shared: dict, prep_res: dict, exec_res: ProblemDocument | Exception) -> str:
        if isinstance(exec_res, Exception):
            shared["error"] = str(exec_res)
            return "invalid"
        shared["document"] = exec_res
        return "default"


class BuildRegistryNode(Node):
    def prep(self, shared: dict) -> ProblemDocument:
        return shared["document"]

    def exec(self, document: ProblemDocument) -> Registry:
        return build_registry(document)

    def exec_fallback(self, prep_res: ProblemDocument, exc: Exception) -> Exception:
        if isinstance(exc, INPUT_ERRORS):
            return exc
        raise exc

    def post(self, shared: dict, prep_res: ProblemDocument, exec_res: Registry | Exception) -> str:
        if isinstance(exec_res, Exception):
            shared["error"] = str(exec_res)
            return "invalid"
        shared["registry"] = exec_res
        return "default"


class RunTasksNode(BatchNode):
    """Tasks run in input order; a failing task is reported and the rest still run."""

    def prep(self, shared: dict) -> list[tuple]:
        settings = shared["request"]["settings"]
        return [(task, shared["registry"], settings) for task in shared["document"].tasks]

    def exec(self, item: tuple) -> TaskResult:
        task, registry, settings = item
        return run_task(task, registry, settings)

    def exec_fallback(self, prep_res: tuple, exc: Exception) -> TaskResult:
        task = prep_res[0]
        if not isinstance(exc, TASK_ERRORS):
            raise exc
        logger.warning("%s failed: %s: %s", task.echo(), type(exc).__name__, exc)
        return TaskResult(
            command=task.echo(), passed=False, error=f"{type(exc).__name__}: {exc}"
        )

    def post(self, shared: dict, prep_res: list, exec_res: list[TaskResult]) -> str:
        shared["results"] = exec_res
        return "default"


class RenderReportNode(Node):
    def prep(self, shared: dict) -> tuple[dict, list[TaskResult]]:
        return shared["request"], shared.get("results", [])

    def exec(self, inputs: tuple[dict, list[TaskResult]]) -> Report:
        request, results = inputs
        if not request.get("timings"):
            results = [r.model_copy(update={"seconds": None}) for r in results]
        return Report(
            command=request["command"],
            input=request.get("input"),
            tasks=results,
            passed=all(r.passed for r in results),
        )

    def post(self, shared: dict, prep_res: tuple, exec_res: Report) -> str:
        shared["report"] = exec_res
        shared["output"] = render_report(exec_res)
        emit = shared["request"].get("emit")
        if emit:
            emit_report(exec_res, emit)
            logger.info("report written to %s", emit)
        return "done"


class ErrorReportNode(Node):
    """Input that cannot be parsed or built yields a report with no task results."""

    def prep(self, shared: dict) -> tuple[dict, str]:
        return shared["request"], shared.get("error", "unknown error")

    def exec(self, inputs: tuple[dict, str]) -> Report:
        request, error = inputs
        return Report(
            command=request["command"], input=request.get("input"), passed=False, error=error
        )

    def post(self, shared: dict, prep_res: tuple, exec_res: Report) -> str:
        logger.error("%s", exec_res.error)
        shared["report"] = exec_res
        shared["output"] = render_report(exec_res)
        return "done"
