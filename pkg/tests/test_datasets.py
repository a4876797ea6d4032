import shutil

import numpy as np
import pytest

from diact import datasets, from_coefficients, requirements
from diact.errors import MissingPublishedError, UnknownFixtureError


def test_catalog():
    assert datasets.names()[0] == "hypothetical"
    assert len([n for n in datasets.names() if n.startswith("us-")]) == len(datasets.US_YEARS)


@pytest.mark.parametrize("name", datasets.CATALOG)
def test_every_fixture_loads(name):
    fix = datasets.load(name)
    n = fix.A.shape[0]
    assert len(fix.sector_names) == n
    assert {"simple-direct", "simple-indirect", "simple-transfer"} <= set(fix.published)
    assert all(m.shape == (n, n) for m in fix.published.values())
    assert not fix.A.flags.writeable


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError):
        datasets.load("us-1900")


def test_missing_published_label():
    fix = datasets.load("us-2006")
    s = from_coefficients(fix.A, np.ones(7))
    with pytest.raises(MissingPublishedError):
        datasets.regression_compare(fix, requirements(s, "direct", "composite"), 5e-3)


def test_regression_report_locates_worst_cell():
    fix = datasets.load("us-1947")
    s = from_coefficients(fix.A, np.ones(7))
    rep = datasets.regression_compare(fix, requirements(s, "indirect", "simple"), 1e-9)
    diff = abs(requirements(s, "indirect", "simple").values - fix.published["simple-indirect"])
    assert diff[rep.worst_cell] == rep.max_abs and not rep.passed


def test_env_override(tmp_path, monkeypatch):
    shutil.copytree(datasets.fixtures_dir() / "us-2006", tmp_path / "us-2006")
    monkeypatch.setenv("DIACT_FIXTURES_DIR", str(tmp_path))
    assert datasets.load("us-2006").A.shape == (7, 7)
    with pytest.raises(Exception):
        datasets.load("us-1919")
