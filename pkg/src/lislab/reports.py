"""Run configuration, reports, and deterministic serialization.

Identical configurations must produce byte-identical CSV and JSON bodies,
so serialized output carries the config echo, the library version, and the
metrics, but never wall time (that goes to stderr logging only).  Floats in
CSV print with 9 significant digits.
"""

from __future__ import annotations

import io
import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64(value: int) -> int:
    """One round of the splitmix64 mixer; the stock 64-bit integer hash."""
    z = (value + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def child_seed(master: int, index: int) -> int:
    """Replica seed: master XOR hash(index).

    Documented splitting rule so replica i draws the same stream whether
    replicas run sequentially or in parallel.
    """
    return (master & MASK64) ^ splitmix64(index)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class RunConfig:
    """Echo of one CLI invocation: subcommand, seed, output choices, params."""

    subcommand: str
    seed: int | None
    fmt: str
    out: str | None
    params: tuple[tuple[str, object], ...] = ()

    @classmethod
    def build(cls, subcommand: str, seed, fmt: str, out, **params) -> "RunConfig":
        return cls(
            subcommand=subcommand,
            seed=None if seed is None else int(seed),
            fmt=fmt,
            out=None if out is None else str(out),
            params=tuple(sorted((k, v) for k, v in params.items() if v is not None)),
        )


@dataclass(frozen=True)
class TableData:
    """A tabular payload: column names plus rows of cells."""

    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


@dataclass
class Report:
    """Everything one subcommand produced.

    identity_ok=False marks a failed identity check (CLI exit code 4);
    wall_time_s is diagnostic only and never serialized.
    """

    config: RunConfig
    metrics: dict[str, object] = field(default_factory=dict)
    table: TableData | None = None
    warnings: tuple[str, ...] = ()
    identity_ok: bool = True
    wall_time_s: float | None = None


def format_value(value) -> str:
    """Deterministic scalar formatting: floats at 9 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.9g}"
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(v) for v in value)
    return str(value)


def _config_pairs(report: Report) -> list[tuple[str, str]]:
    from . import __version__

    pairs = [("subcommand", report.config.subcommand), ("version", __version__)]
    if report.config.seed is not None:
        pairs.append(("seed", str(report.config.seed)))
    for key, value in report.config.params:
        pairs.append((key, format_value(value)))
    return pairs


def report_to_csv(report: Report) -> str:
    """CSV body: '# key=value' config echo lines, then a header row and data.

    Key-value reports use the two-column schema metric,value; tabular
    reports use their own column set.
    """
    buf = io.StringIO()
    config_keys = set()
    for key, value in _config_pairs(report):
        config_keys.add(key)
        buf.write(f"# {key}={value}\n")
    for warning in report.warnings:
        buf.write(f"# warning: {warning}\n")
    writer = csv.writer(buf, lineterminator="\n")
    if report.table is not None:
        # headline metrics ride along as comments so the body stays one table
        for key, value in report.metrics.items():
            if key not in config_keys:
                buf.write(f"# {key}={format_value(value)}\n")
        writer.writerow(report.table.columns)
        for row in report.table.rows:
            writer.writerow([format_value(cell) for cell in row])
    else:
        writer.writerow(["metric", "value"])
        for key, value in report.metrics.items():
            writer.writerow([key, format_value(value)])
    return buf.getvalue()


def _jsonable(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def report_to_json(report: Report) -> str:
    from . import __version__

    doc = {
        "config": {
            "subcommand": report.config.subcommand,
            "seed": report.config.seed,
            "params": {k: _jsonable(v) for k, v in report.config.params},
        },
        "version": __version__,
        "metrics": {k: _jsonable(v) for k, v in report.metrics.items()},
    }
    if report.warnings:
        doc["warnings"] = list(report.warnings)
    if report.table is not None:
        doc["table"] = {
            "name": report.table.name,
            "columns": list(report.table.columns),
            "rows": [[_jsonable(c) for c in row] for row in report.table.rows],
        }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def serialize_report(report: Report) -> str:
    return report_to_json(report) if report.config.fmt == "json" else report_to_csv(report)
