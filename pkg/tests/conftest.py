"""Pytest configuration for hermackey tests."""

import pytest

from exactalg import catalog_groups, zmod
from hermackey.config import Settings
from hermackey.registry import builtin_registry
from mackey import burnside_mod, underline_of_ring


@pytest.fixture
def groups():
    """Catalog groups by name."""
    return catalog_groups()


@pytest.fixture
def a3():
    """Burnside Mackey functor mod 3."""
    return burnside_mod(3)


@pytest.fixture
def z3():
    """Fixed-point functor of Z/3."""
    return underline_of_ring(zmod(3))


@pytest.fixture
def settings():
    """Built-in defaults, independent of config files and the environment."""
    return Settings()


@pytest.fixture
def registry():
    """Fresh built-in registry."""
    return builtin_registry()


@pytest.fixture
def problem_yaml():
    """A document with one declaration of each common kind and three tasks."""
    return """
declarations:
  - kind: ring
    name: F7
    builder: zmod
    m: 7
  - kind: mackey
    name: B7
    builder: burnside_mod
    m: 7
  - kind: mackey
    name: U7
    builder: underline
    ring: F7
tasks:
  - command: check-axioms
    mackey: B7
  - command: witt0
    mackey: A3
    dim_bound: 4
  - command: involution-classes
    group: S3
"""
