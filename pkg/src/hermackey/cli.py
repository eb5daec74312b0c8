"""``hermackey`` command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import get_args

import pydantic

from hermackey.config import Settings, load_settings
from hermackey.flow import build_flow
from hermackey.problem import COMMANDS, NerveKind, TaskSpec
from realnerve import Coefficients

logger = logging.getLogger("hermackey")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
TASK_FLAGS = ("mackey", "group", "morphism", "monoid", "nerve", "n", "dim_bound", "trunc", "coeff")


def _common_arguments() -> argparse.ArgumentParser:
    helps = Settings.field_help()
    common = argparse.ArgumentParser(add_help=False)

    # Input and output
    common.add_argument("--input", help="Problem document (JSON or YAML)")
    common.add_argument("--emit", help="Also write the report as JSON to this file")
    common.add_argument("--timings", action="store_true", help="Include wall-clock times")
    common.add_argument("--config", help="Settings file (default: config/hermackey.toml)")
    common.add_argument("--log-level", help=helps["log_level"])

    # Task arguments
    common.add_argument("--mackey", help="Hermitian Mackey functor name")
    common.add_argument("--group", help="Finite group name")
    common.add_argument("--morphism", help="Morphism name; a,b composes b after a")
    common.add_argument("--monoid", help="Monoid with anti-involution (or group) name")
    common.add_argument("--nerve", choices=get_args(NerveKind), help="Semi-simplicial set")
    common.add_argument("--n", type=int, help="Form dimension for classify-forms")
    common.add_argument(
        "--method",
        choices=["generators", "exhaustive"],
        default="generators",
        help="Orbit method for classify-forms",
    )
    common.add_argument("--dim-bound", type=int, help=helps["dim_bound"])
    common.add_argument("--trunc", type=int, help=helps["trunc"])
    common.add_argument("--coeff", help=helps["coeff"])
    common.add_argument("--seed", type=int, help=helps["seed"])
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermackey",
        description="Hermitian Mackey functors, Hermitian K-theory and real nerves",
    )
    common = _common_arguments()
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("run", parents=[common], help="Run the task list of --input")
    for command in COMMANDS:
        commands.add_parser(command, parents=[common], help=f"Run one {command} task")
    return parser


def _task_from_args(args: argparse.Namespace) -> TaskSpec:
    values = {k: getattr(args, k) for k in TASK_FLAGS if getattr(args, k) is not None}
    if args.seed is not None:
        values["seed"] = args.seed
    return TaskSpec(command=args.command, method=args.method, **values)


def main(argv: list[str] | None = None) -> int:
    """Exit 0 when every check passes, 1 on a failed check or task error, 2 on bad input."""
    args = build_parser().parse_args(argv)
    overrides = {
        "seed": args.seed,
        "dim_bound": args.dim_bound,
        "trunc": args.trunc,
        "coeff": args.coeff,
        "log_level": args.log_level,
    }
    try:
        settings = load_settings(args.config, overrides)
        Coefficients.parse(settings.coeff)
        logging.basicConfig(
            level=settings.log_level.upper(), format=LOG_FORMAT, stream=sys.stderr, force=True
        )
    except (OSError, ValueError) as e:
        print(f"hermackey: error: {e}", file=sys.stderr)
        return 2
    logger.debug("settings: %s", settings)

    tasks: list[TaskSpec] = []
    if args.command != "run":
        try:
            tasks.append(_task_from_args(args))
        except pydantic.ValidationError as e:
            err = e.errors()[0]
            where = ".".join(str(p) for p in err["loc"])
            message = f"--{where.replace('_', '-')}: {err['msg']}" if where else err["msg"]
            print(f"hermackey: error: {message}", file=sys.stderr)
            return 2

    shared = {
        "request": {
            "command": args.command,
            "input": args.input,
            "tasks": tasks,
            "settings": settings,
            "emit": args.emit,
            "timings": args.timings,
        }
    }
    build_flow().run(shared)
    sys.stdout.write(shared["output"])
    return shared["report"].exit_code


if __name__ == "__main__":
    sys.exit(main())
