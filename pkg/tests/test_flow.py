"""Tests for the flow wiring."""

from hermackey.flow import build_flow
from hermackey.nodes import (
    BuildRegistryNode,
    ErrorReportNode,
    LoadProblemNode,
    RenderReportNode,
    RunTasksNode,
)
from hermackey.problem import TaskSpec


def test_flow_shape():
    flow = build_flow()
    load = flow.start_node

    assert isinstance(load, LoadProblemNode)
    build = load.successors["default"]
    assert isinstance(build, BuildRegistryNode)
    assert isinstance(load.successors["invalid"], ErrorReportNode)
    assert isinstance(build.successors["invalid"], ErrorReportNode)
    run = build.successors["default"]
    assert isinstance(run, RunTasksNode)
    assert isinstance(run.successors["default"], RenderReportNode)


def test_flow_end_to_end(settings):
    task = TaskSpec(command="involution-classes", group="Q8")
    shared = {
        "request": {
            "command": "involution-classes",
            "input": None,
            "tasks": [task],
            "settings": settings,
        }
    }

    build_flow().run(shared)

    assert shared["report"].passed
    assert shared["output"].endswith("1 task(s), all PASS\n")


def test_flow_error_branch(settings):
    shared = {"request": {"command": "run", "input": None, "tasks": [], "settings": settings}}

    build_flow().run(shared)

    assert shared["report"].exit_code == 2
    assert shared["output"].startswith("hermackey run\nERROR:")
