"""Flat `key = value` run-configuration files."""

from __future__ import annotations

from pathlib import Path

from ..translation import TranslationMode
from .runner import ConfigError, RunConfig, Strategy

_BOOL_VALUES = {"true": True, "false": False, "1": True, "0": False}


def parse_config_text(text: str) -> RunConfig:
    values: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {line_no}: expected key = value")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()

    kwargs: dict[str, object] = {}
    for key, value in values.items():
        if key == "mode":
            kwargs["mode"] = TranslationMode.parse(value)
        elif key == "strategy":
            kwargs["strategy"] = Strategy.parse(value)
        elif key == "budget":
            kwargs["budget"] = int(value)
        elif key == "backend":
            kwargs["backend"] = value
        elif key == "seed":
            kwargs["seed"] = int(value)
        elif key == "include_unknown_in_ratios":
            if value.lower() not in _BOOL_VALUES:
                raise ConfigError(f"config key {key}: expected true/false")
            kwargs["include_unknown_in_ratios"] = _BOOL_VALUES[value.lower()]
        elif key == "prompt_version":
            kwargs["prompt_version"] = value
        elif key == "oracle_base_url":
            kwargs["oracle_base_url"] = value
        elif key == "oracle_model":
            kwargs["oracle_model"] = value
        else:
            raise ConfigError(f"unknown config key: {key}")
    try:
        return RunConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str | Path) -> RunConfig:
    return parse_config_text(Path(path).read_text(encoding="utf-8"))
