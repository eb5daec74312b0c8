"""Run settings: built-in defaults, ``config/hermackey.toml``, ``HERMACKEY_*`` variables, flags."""

from __future__ import annotations

import logging
import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from collections.abc import Mapping
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

logger = logging.getLogger("hermackey")

ENV_PREFIX = "HERMACKEY_"
DEFAULT_CONFIG = Path(__file__).resolve().parents[2] / "config" / "hermackey.toml"


@dataclass(frozen=True)
class Settings:
    seed: int = field(default=0, metadata={"help": "Seed for sampled verification"})
    budget: int = field(
        default=10**8, metadata={"help": "Exhaustive elementary checks before sampling"}
    )
    samples: int = field(default=10**6, metadata={"help": "Sampled checks above the budget"})
    max_elements: int = field(
        default=2 * 10**7, metadata={"help": "Fixed-level elements scanned by classification"}
    )
    max_group: int = field(
        default=10**5, metadata={"help": "Matrices enumerated by the exhaustive orbit method"}
    )
    max_simplices: int = field(
        default=2 * 10**5, metadata={"help": "Simplices per level of a semi-simplicial set"}
    )
    dim_bound: int = field(default=4, metadata={"help": "Dimension bound D for KH0 and W0"})
    trunc: int = field(default=3, metadata={"help": "Truncation degree T for nerves"})
    coeff: str = field(default="z", metadata={"help": "Homology coefficients: z, q or zp:P"})
    log_level: str = field(default="WARNING", metadata={"help": "Logging level"})

    @classmethod
    def field_help(cls) -> dict[str, str]:
        return {f.name: f.metadata.get("help", "") for f in fields(cls)}


def _convert(name: str, raw: Any) -> Any:
    kind = {f.name: f.type for f in fields(Settings)}[name]
    if kind in ("int", int):
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise ValueError(f"setting {name} must be an integer, got {raw!r}") from None
    return str(raw)


def _from_toml(path: Path) -> dict[str, Any]:
    with open(path, "rb") as f:
        data = tomllib.load(f)
    flat: dict[str, Any] = {}
    for table in ("limits", "run"):
        flat.update(data.get(table, {}))
    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(flat) - known)
    if unknown:
        logger.warning("ignoring unknown settings in %s: %s", path, ", ".join(unknown))
    return {k: v for k, v in flat.items() if k in known}


def _from_env() -> dict[str, Any]:
    values = {}
    for f in fields(Settings):
        raw = os.environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            values[f.name] = raw
    return values


def load_settings(
    config_path: str | Path | None = None, overrides: Mapping[str, Any] | None = None
) -> Settings:
    """Merge the layers; ``None`` values in ``overrides`` are ignored."""
    load_dotenv()
    settings = Settings()
    path = Path(config_path or os.environ.get(ENV_PREFIX + "CONFIG") or DEFAULT_CONFIG)
    layers: list[Mapping[str, Any]] = []
    if path.exists():
        layers.append(_from_toml(path))
    elif config_path is not None:
        raise FileNotFoundError(f"config file not found: {path}")
    layers.append(_from_env())
    layers.append({k: v for k, v in (overrides or {}).items() if v is not None})
    for layer in layers:
        settings = replace(settings, **{k: _convert(k, v) for k, v in layer.items()})
    return settings
