"""Flow construction for a hermackey run."""

from pocketflow import Flow

from hermackey.nodes import (
    BuildRegistryNode,
    ErrorReportNode,
    LoadProblemNode,
    RenderReportNode,
    RunTasksNode,
)


def build_flow() -> Flow:
    """Build the run flow.

    Flow:
    1. LoadProblem -> BuildRegistry -> RunTasks -> RenderReport
    2. LoadProblem -> (invalid) -> ErrorReport
    3. BuildRegistry -> (invalid) -> ErrorReport
    """
    load_problem = LoadProblemNode()
    build_registry = BuildRegistryNode()
    run_tasks = RunTasksNode()
    render_report = RenderReportNode()
    error_report = ErrorReportNode()

    load_problem >> build_registry >> run_tasks >> render_report

    load_problem - "invalid" >> error_report
    build_registry - "invalid" >> error_report

    return Flow(start=load_problem)
