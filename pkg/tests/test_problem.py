"""Tests for input documents, declarations and the registry."""

import json

import pytest

from exactalg.errors import ParseError, UnknownReference, ValidationError
from hermackey.problem import (
    ProblemDocument,
    TaskSpec,
    build_registry,
    dump_document,
    dump_group,
    dump_mackey,
    dump_monoid,
    dump_ring,
    load_problem,
    parse_input,
)
from mackey import check_hermitian_axioms


def test_parse_yaml(problem_yaml):
    doc = parse_input(problem_yaml)

    assert [d.name for d in doc.declarations] == ["F7", "B7", "U7"]
    assert [t.command for t in doc.tasks] == ["check-axioms", "witt0", "involution-classes"]
    assert doc.tasks[1].dim_bound == 4


def test_parse_json():
    text = json.dumps({"tasks": [{"command": "kh0", "mackey": "A3"}]})

    assert parse_input(text).tasks == [TaskSpec(command="kh0", mackey="A3")]


def test_bare_declarations():
    """A list is read as declarations, an object with kind as a single one."""
    assert len(parse_input("- {kind: ring, name: R, builder: zmod, m: 5}").declarations) == 1
    assert parse_input("kind: group\nname: G\ncatalog: S3\n").declarations[0].name == "G"
    assert parse_input("") == ProblemDocument()


def test_parse_error_position():
    with pytest.raises(ParseError) as excinfo:
        parse_input('{"tasks": [\n  {"command": }\n]}')

    assert excinfo.value.line == 2
    assert excinfo.value.column is not None


def test_yaml_parse_error():
    with pytest.raises(ParseError) as excinfo:
        parse_input("tasks: [a, b\n")

    assert excinfo.value.line is not None


def test_schema_errors():
    with pytest.raises(ValidationError):
        parse_input("tasks:\n  - command: frobnicate\n")
    with pytest.raises(ValidationError):
        parse_input("tasks:\n  - command: kh0\n    colour: blue\n")
    with pytest.raises(ValidationError):
        parse_input("- {kind: group, name: G}")


def test_flat_table_must_be_square():
    doc = parse_input("- {kind: group, name: G, table: [0, 1, 1]}")

    with pytest.raises(ValidationError) as excinfo:
        build_registry(doc)
    assert excinfo.value.invariant == "square-table"


def test_non_associative_table():
    doc = parse_input("- {kind: group, name: G, table: [[0, 1, 2], [1, 0, 0], [2, 0, 1]]}")

    with pytest.raises(ValidationError):
        build_registry(doc)


def test_missing_fields():
    doc = parse_input("- {kind: ring, name: R, builder: zmod}")

    with pytest.raises(ValidationError) as excinfo:
        build_registry(doc)
    assert "missing m" in str(excinfo.value)


def test_unknown_reference():
    doc = parse_input("- {kind: mackey, name: L, builder: underline, ring: nowhere}")

    with pytest.raises(UnknownReference):
        build_registry(doc)


def test_build_registry(problem_yaml):
    reg = build_registry(parse_input(problem_yaml))

    assert reg.mackey("U7").ring is reg.ring("F7")
    assert reg.mackey("B7").fix.orders == (7, 7)
    assert reg.has("mackey", "A3")
    assert "B7" in reg.names("mackey")


def test_registry_monoids(registry):
    """Any group doubles as a monoid under inversion; two catalog monoids are not groups."""
    assert registry.monoid("S3").size == 6
    assert registry.monoid("Null2").unit is None
    assert registry.monoid("MulZ3").size == 3
    assert "Null2" not in registry.names("group")
    with pytest.raises(UnknownReference):
        registry.monoid("nothing")


def test_morphism_declarations():
    doc = parse_input(
        """
- {kind: morphism, name: d, builder: rank, m: 3}
- {kind: morphism, name: h, builder: half, m: 3}
- {kind: morphism, name: dh, builder: compose, first: h, second: d}
"""
    )
    reg = build_registry(doc)

    assert reg.morphism("dh").source is reg.morphism("h").source
    assert reg.morphism("dh").target is reg.morphism("d").target


def test_raw_round_trip(registry):
    """Raw dumps of catalog objects rebuild into functors that satisfy the axioms."""
    ring = registry.ring("Z3")
    decls = [
        dump_group(registry.group("S3"), "G"),
        dump_ring(ring, "R"),
        dump_mackey(registry.mackey("A3"), "L", "R"),
        dump_monoid(registry.monoid("C2"), "M"),
    ]
    text = dump_document(ProblemDocument(declarations=decls))
    reg = build_registry(parse_input(text))

    assert reg.group("G").order == 6
    assert reg.monoid("M").size == 2
    assert check_hermitian_axioms(reg.mackey("L")).passed


def test_load_problem(tmp_path, problem_yaml):
    path = tmp_path / "problem.yaml"
    path.write_text(problem_yaml, encoding="utf-8")

    assert len(load_problem(path).tasks) == 3
    with pytest.raises(OSError):
        load_problem(tmp_path / "missing.yaml")


def test_task_echo():
    task = TaskSpec(command="witt0", mackey="A3", dim_bound=4)

    assert task.echo() == "witt0 --mackey A3 --dim-bound 4"
    assert TaskSpec(command="classify-forms", mackey="A3", method="exhaustive").echo() == (
        "classify-forms --mackey A3 --method exhaustive"
    )


def test_task_requires_flags():
    """Each command names the flags it cannot run without."""
    with pytest.raises(ValidationError, match="kh0 needs --mackey"):
        parse_input("tasks:\n  - command: kh0\n")
    with pytest.raises(ValidationError, match="needs --group"):
        parse_input("tasks:\n  - {command: nerve-homology, nerve: group, monoid: S3}\n")

    doc = parse_input("tasks:\n  - {command: check-axioms, morphism: d3}\n")
    assert doc.tasks[0].morphism == "d3"
    assert TaskSpec(command="fixed-iso-check", group="S3").group == "S3"
