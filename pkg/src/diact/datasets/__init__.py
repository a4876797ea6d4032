"""Bundled fixtures: the three-sector worked example and the aggregated US tables.

Each fixture is a directory of labelled CSV files (see :mod:`diact.csvio`):

* ``A.csv`` - technical coefficients (always present)
* ``f.csv`` - final demand (worked example only)
* ``<frame>-<kind>.csv`` - published requirements matrices
* ``display-*.csv`` - other printed intermediate results (worked example only)

Set ``DIACT_FIXTURES_DIR`` to read fixtures from another directory with the
same layout.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from ..csvio import read_matrix_csv, read_vector_csv
from ..errors import MissingPublishedError, UnknownFixtureError
from ..requirements import RequirementsMatrix

US_YEARS = (1919, 1929, 1939, 1947, 1958, 1963, 1967, 1972, 1977, 1982, 1987, 1992, 1997, 2002, 2006)
CATALOG = ("hypothetical",) + tuple(f"us-{y}" for y in US_YEARS)


@dataclass(frozen=True)
class Fixture:
    name: str
    A: np.ndarray
    sector_names: tuple[str, ...]
    published: dict[str, np.ndarray] = field(default_factory=dict)
    f: np.ndarray | None = None
    displays: dict[str, np.ndarray] = field(default_factory=dict)


@dataclass(frozen=True)
class DeviationReport:
    fixture: str
    label: str
    max_abs: float
    median_abs: float
    worst_cell: tuple[int, int]
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_abs <= self.tol


def fixtures_dir() -> Path:
    override = os.environ.get("DIACT_FIXTURES_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data"))


def names() -> tuple[str, ...]:
    return CATALOG


def load(name: str) -> Fixture:
    if name not in CATALOG:
        raise UnknownFixtureError(f"unknown fixture {name!r}; choose from {', '.join(CATALOG)}")
    base = fixtures_dir() / name
    a = read_matrix_csv(base / "A.csv")
    published, displays = {}, {}
    f = None
    for path in sorted(base.glob("*.csv")):
        stem = path.stem
        if stem == "A":
            continue
        if stem == "f":
            f, _ = read_vector_csv(path)
        elif stem.startswith("display-"):
            m = read_matrix_csv(path).values
            displays[stem.removeprefix("display-")] = m[:, 0] if m.shape[1] == 1 else m
        else:
            published[stem] = read_matrix_csv(path).values
    for arr in [a.values, f, *published.values(), *displays.values()]:
        if arr is not None:
            arr.setflags(write=False)
    return Fixture(name, a.values, a.row_labels, published, f, displays)


def regression_compare(fix: Fixture, computed: RequirementsMatrix, tol: float) -> DeviationReport:
    """Elementwise deviation between a computed matrix and the published one."""
    label = computed.label
    if label not in fix.published:
        raise MissingPublishedError(f"fixture {fix.name} has no published {label} matrix")
    diff = np.abs(np.asarray(computed.values) - fix.published[label])
    worst = np.unravel_index(int(np.argmax(diff)), diff.shape)
    return DeviationReport(fix.name, label, float(diff.max()), float(np.median(diff)),
                           (int(worst[0]), int(worst[1])), float(tol))
