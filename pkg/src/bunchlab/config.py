"""JSON experiment configuration (schema 1).

Example::

    {
      "schema": 1,
      "mode": "scan",
      "packets_a": [{"center_time_s": 0.0, "width_s": 1e-13}],
      "packets_b": [{"center_time_s": 0.0, "width_s": 1e-13}],
      "transmissivity": 0.5,
      "scan": {"start_s": -5e-13, "stop_s": 5e-13, "steps": 101}
    }

Packet records take ``center_time_s``, ``width_s`` (required) and optional
``detuning_rad_s`` and ``phase_rad``. Every mode accepts only its own fields;
anything else is reported as a validation error.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .exceptions import BunchlabError, LabelParseError
from .scenarios import parse_label
from .temporal_modes import WavePacket

SCHEMA_VERSION = 1
MODES = ("enhance", "scan", "table", "verify", "amplifier")

_COMMON = {"schema", "mode"}
_REQUIRED = {
    "enhance": {"transmissivity"},
    "scan": {"packets_a", "packets_b", "transmissivity", "scan"},
    "table": {"table"},
    "verify": set(),
    "amplifier": {"amplifier"},
}
_OPTIONAL = {
    "enhance": {"packets_a", "packets_b", "scenario_label"},
    "scan": set(),
    "table": set(),
    "verify": {"seed"},
    "amplifier": set(),
}


class ConfigError(BunchlabError, ValueError):
    """Configuration could not be parsed or validated.

    ``errors`` lists ``(path, message)`` pairs, one per offending field.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        lines = "; ".join(f"{path}: {msg}" for path, msg in self.errors)
        super().__init__(f"invalid configuration: {lines}")


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str
    packets_a: tuple[WavePacket, ...] = ()
    packets_b: tuple[WavePacket, ...] = ()
    transmissivity: float | None = None
    scan: dict | None = None
    scenario_label: str | None = None
    table: dict | None = None
    seed: int | None = None
    amplifier: dict | None = None


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _is_count(x):
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _packets(raw, path, unit, errors):
    if not isinstance(raw, list):
        errors.append((path, "expected a list of packet records"))
        return ()
    packets = []
    for i, rec in enumerate(raw):
        where = f"{path}[{i}]"
        if not isinstance(rec, dict):
            errors.append((where, "expected an object"))
            continue
        extra = set(rec) - {"center_time_s", "width_s", "detuning_rad_s", "phase_rad"}
        for key in sorted(extra):
            errors.append((f"{where}.{key}", "unknown field"))
        values = {}
        for key, default in (("center_time_s", None), ("width_s", None),
                             ("detuning_rad_s", 0.0), ("phase_rad", 0.0)):
            value = rec.get(key, default)
            if value is None:
                errors.append((f"{where}.{key}", "missing"))
            elif not _is_number(value):
                errors.append((f"{where}.{key}", f"expected a finite number, got {value!r}"))
            else:
                values[key] = float(value)
        if "width_s" in values and values["width_s"] <= 0:
            errors.append((f"{where}.width_s", f"must be positive, got {values['width_s']!r}"))
            continue
        if len(values) == 4:
            packets.append(WavePacket(center_time=values["center_time_s"] / unit,
                                      width=values["width_s"] / unit,
                                      detuning=values["detuning_rad_s"] * unit,
                                      phase=values["phase_rad"]))
    return tuple(packets)


def validate(doc: Any, *, unit: float = 1.0) -> ExperimentConfig:
    """Validate a decoded JSON document and build an :class:`ExperimentConfig`.

    Times are divided by ``unit`` (seconds per internal time unit) and
    detunings multiplied by it.
    """
    errors = []
    if not isinstance(doc, dict):
        raise ConfigError([("$", "top level must be an object")])
    if not (_is_number(unit) and unit > 0):
        raise ConfigError([("--unit", f"must be a positive number, got {unit!r}")])
    schema = doc.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        errors.append(("schema", f"unsupported schema {schema!r}, expected {SCHEMA_VERSION}"))
    mode = doc.get("mode")
    if mode not in MODES:
        errors.append(("mode", f"expected one of {', '.join(MODES)}, got {mode!r}"))
        raise ConfigError(errors)

    allowed = _COMMON | _REQUIRED[mode] | _OPTIONAL[mode]
    for key in sorted(set(doc) - allowed):
        errors.append((key, f"not allowed in mode {mode!r}"))
    required = set(_REQUIRED[mode])
    if mode == "enhance":
        if "scenario_label" in doc:
            required.discard("transmissivity")
            for key in ("packets_a", "packets_b"):
                if key in doc:
                    errors.append((key, "cannot be combined with scenario_label"))
        else:
            required |= {"packets_a", "packets_b"}
    for key in sorted(required - set(doc)):
        errors.append((key, "missing"))

    kwargs: dict[str, Any] = {"mode": mode}
    for key in ("packets_a", "packets_b"):
        if key in doc:
            kwargs[key] = _packets(doc[key], key, unit, errors)
    if "transmissivity" in doc:
        t = doc["transmissivity"]
        if not _is_number(t) or not 0.0 <= t <= 1.0:
            errors.append(("transmissivity", f"must lie in [0, 1], got {t!r}"))
        else:
            kwargs["transmissivity"] = float(t)
    if "packets_a" in kwargs and "packets_b" in kwargs:
        if not kwargs["packets_a"] and not kwargs["packets_b"] and not errors:
            errors.append(("packets_a", "configuration needs at least one photon"))
    if "scan" in doc:
        scan = doc["scan"]
        if not isinstance(scan, dict):
            errors.append(("scan", "expected an object"))
        else:
            for key in sorted(set(scan) - {"start_s", "stop_s", "steps"}):
                errors.append((f"scan.{key}", "unknown field"))
            for key in ("start_s", "stop_s"):
                if not _is_number(scan.get(key)):
                    errors.append((f"scan.{key}", "expected a finite number"))
            steps = scan.get("steps")
            if not (_is_count(steps) and steps >= 2):
                errors.append(("scan.steps", f"must be an integer >= 2, got {steps!r}"))
            if not errors:
                kwargs["scan"] = {"start": scan["start_s"] / unit,
                                  "stop": scan["stop_s"] / unit, "steps": steps}
    if "scenario_label" in doc:
        label = doc["scenario_label"]
        try:
            parse_label(label)
            kwargs["scenario_label"] = label
        except (LabelParseError, TypeError) as exc:
            errors.append(("scenario_label", str(exc)))
    if "table" in doc:
        table = doc["table"]
        if not isinstance(table, dict):
            errors.append(("table", "expected an object"))
        else:
            for key in sorted(set(table) - {"n", "m"}):
                errors.append((f"table.{key}", "unknown field"))
            for key in ("n", "m"):
                if not _is_count(table.get(key)):
                    errors.append((f"table.{key}", "expected a non-negative integer"))
            kwargs["table"] = table
    if "seed" in doc:
        seed = doc["seed"]
        if not _is_count(seed):
            errors.append(("seed", "expected a non-negative integer"))
        kwargs["seed"] = seed
    if "amplifier" in doc:
        amp = doc["amplifier"]
        if not isinstance(amp, dict):
            errors.append(("amplifier", "expected an object"))
        else:
            for key in sorted(set(amp) - {"small_g", "n_matched", "n_unmatched"}):
                errors.append((f"amplifier.{key}", "unknown field"))
            g = amp.get("small_g", 0.1)
            if isinstance(g, list) and len(g) == 2 and all(_is_number(x) for x in g):
                g = complex(g[0], g[1])
            elif _is_number(g):
                g = complex(g)
            else:
                errors.append(("amplifier.small_g", "expected a number or [re, im]"))
            if isinstance(g, complex) and abs(g) > 0.1:
                errors.append(("amplifier.small_g", f"|g| = {abs(g):.3g} exceeds 0.1"))
            for key in ("n_matched", "n_unmatched"):
                if not _is_count(amp.get(key, 0)):
                    errors.append((f"amplifier.{key}", "expected a non-negative integer"))
            kwargs["amplifier"] = {"small_g": g, "n_matched": amp.get("n_matched", 0),
                                   "n_unmatched": amp.get("n_unmatched", 0)}
    if errors:
        raise ConfigError(errors)
    return ExperimentConfig(**kwargs)


def load(path, *, unit: float = 1.0) -> ExperimentConfig:
    """Read and validate a JSON configuration file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError([(str(path), f"cannot read file: {exc.strerror}")]) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError([(f"{path}:{exc.lineno}:{exc.colno}", exc.msg)]) from exc
    return validate(doc, unit=unit)
