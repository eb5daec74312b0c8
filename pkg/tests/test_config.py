"""Tests for settings precedence."""

import pytest

from hermackey.config import Settings, load_settings


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "hermackey.toml"
    path.write_text(
        '[limits]\nbudget = 500\nunknown_key = 1\n\n[run]\nseed = 11\ncoeff = "q"\n',
        encoding="utf-8",
    )
    return path


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("SEED", "BUDGET", "COEFF", "CONFIG", "TRUNC"):
        monkeypatch.delenv(f"HERMACKEY_{name}", raising=False)


def test_defaults():
    s = Settings()

    assert s.seed == 0
    assert s.max_elements == 2 * 10**7
    assert s.dim_bound == 4
    assert s.trunc == 3


def test_file_layer(config_file, caplog):
    s = load_settings(config_file)

    assert s.budget == 500
    assert s.seed == 11
    assert s.coeff == "q"
    assert "unknown_key" in caplog.text


def test_env_beats_file(config_file, monkeypatch):
    monkeypatch.setenv("HERMACKEY_SEED", "23")

    assert load_settings(config_file).seed == 23


def test_overrides_beat_env(config_file, monkeypatch):
    monkeypatch.setenv("HERMACKEY_SEED", "23")

    s = load_settings(config_file, {"seed": 5, "trunc": None})
    assert s.seed == 5
    assert s.trunc == 3


def test_bad_values(config_file, monkeypatch):
    monkeypatch.setenv("HERMACKEY_TRUNC", "deep")

    with pytest.raises(ValueError):
        load_settings(config_file)


def test_missing_config(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_settings(tmp_path / "absent.toml")


def test_field_help():
    assert "Seed" in Settings.field_help()["seed"]
