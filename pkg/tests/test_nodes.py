"""Tests for the flow nodes, run one at a time against a shared store."""

from hermackey.nodes import (
    BuildRegistryNode,
    ErrorReportNode,
    LoadProblemNode,
    RenderReportNode,
    RunTasksNode,
)
from hermackey.problem import ProblemDocument, TaskSpec, parse_input
from hermackey.report import TaskResult


def _request(settings, command="run", **extra):
    request = {"command": command, "input": None, "tasks": [], "settings": settings}
    return {"request": {**request, **extra}}


def test_load_problem_from_file(tmp_path, settings, problem_yaml):
    """run reads the task list of the document."""
    path = tmp_path / "problem.yaml"
    path.write_text(problem_yaml, encoding="utf-8")
    shared = _request(settings)
    shared["request"]["input"] = str(path)

    action = LoadProblemNode().run(shared)

    assert action == "default"
    assert len(shared["document"].tasks) == 3


def test_load_problem_flag_tasks(settings):
    """A single command runs the task built from flags."""
    task = TaskSpec(command="witt0", mackey="A3")
    shared = _request(settings, command="witt0", tasks=[task])

    assert LoadProblemNode().run(shared) == "default"
    assert shared["document"].tasks == [task]


def test_load_problem_invalid(tmp_path, settings):
    path = tmp_path / "bad.json"
    path.write_text('{"tasks": [', encoding="utf-8")
    shared = _request(settings)
    shared["request"]["input"] = str(path)

    assert LoadProblemNode().run(shared) == "invalid"
    assert "line" in shared["error"]


def test_run_without_tasks(settings):
    shared = _request(settings)

    assert LoadProblemNode().run(shared) == "invalid"
    assert "no tasks" in shared["error"]


def test_build_registry_node(problem_yaml):
    shared = {"document": parse_input(problem_yaml)}

    assert BuildRegistryNode().run(shared) == "default"
    assert shared["registry"].has("mackey", "B7")


def test_build_registry_unknown_reference():
    doc = parse_input("- {kind: mackey, name: L, builder: underline, ring: nowhere}")
    shared = {"document": doc}

    assert BuildRegistryNode().run(shared) == "invalid"
    assert "nowhere" in shared["error"]


def test_run_tasks_keeps_going(settings, registry):
    """A failing task is reported and later tasks still run."""
    doc = ProblemDocument(
        tasks=[
            TaskSpec(command="kh0", mackey="missing"),
            TaskSpec(command="involution-classes", group="S3"),
        ]
    )
    shared = {"document": doc, "registry": registry, **_request(settings)}

    RunTasksNode().run(shared)

    first, second = shared["results"]
    assert not first.passed
    assert first.error.startswith("UnknownReference")
    assert second.passed
    assert [row[0] for row in second.rows] == ["e", "(12)"]


def test_render_report_node(settings, tmp_path):
    emit = tmp_path / "report.json"
    result = TaskResult(command="witt0 --mackey A3", seconds=0.5)
    result.value("W0", "Z/4 (stable)")
    shared = {**_request(settings, command="witt0", emit=str(emit)), "results": [result]}

    assert RenderReportNode().run(shared) == "done"
    assert "W0 = Z/4 (stable)" in shared["output"]
    assert "time:" not in shared["output"]
    assert shared["report"].exit_code == 0
    assert '"W0"' in emit.read_text(encoding="utf-8")


def test_error_report_node(settings):
    shared = {**_request(settings), "error": "tasks: bad"}

    assert ErrorReportNode().run(shared) == "done"
    assert shared["report"].exit_code == 2
    assert shared["output"] == "hermackey run\nERROR: tasks: bad\n"
