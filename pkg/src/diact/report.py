"""JSON analysis reports.

Numbers are written with 12 significant digits, which is beyond the
precision of any published table and below the noise amplified through the
Leontief inverse. Output is deterministic for identical inputs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from enum import Enum

import numpy as np

from .csvio import ORIENTATION_NOTE
from .io_model import IoSystem, viability

SCHEMA = "diact-report/1"
SIGNIFICANT_DIGITS = 12


def _round(v: float) -> float:
    r = float(format(float(v), f".{SIGNIFICANT_DIGITS}g"))
    return 0.0 if r == 0 else r


def normalise(obj):
    """Convert arrays, enums and dataclasses into JSON-ready values with rounded floats."""
    if isinstance(obj, np.ndarray):
        return normalise(obj.tolist())
    if isinstance(obj, Enum):
        return obj.value
    if is_dataclass(obj) and not isinstance(obj, type):
        return normalise(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): normalise(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalise(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round(obj)
    return obj


def new_report(system: IoSystem | None = None, **sections) -> dict:
    report = {"schema": SCHEMA, "orientation": ORIENTATION_NOTE}
    if system is not None:
        report["system"] = system_summary(system)
    report.update(sections)
    return report


def system_summary(system: IoSystem) -> dict:
    v = viability(system.A)
    return {
        "n": system.n,
        "sector_names": list(system.sector_names),
        "x": system.x,
        "f": system.f,
        "spectral_radius": system.spectral_radius,
        "viability": {
            "spectral_radius": v.spectral_radius,
            "hawkins_simon_minors_positive": v.hawkins_simon_minors_positive,
            "leontief_nonnegative": v.leontief_nonnegative,
        },
    }


def dumps(report: dict) -> str:
    return json.dumps(normalise(report), indent=2, ensure_ascii=False) + "\n"
