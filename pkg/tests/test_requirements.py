import numpy as np
import pytest
from hypothesis import given, settings

from conftest import viable_systems
from diact import (
    Frame,
    Kind,
    LegacyVariant,
    cycling_coefficients,
    diact_gross_outputs,
    diact_gross_outputs_via_requirements,
    from_coefficients,
    legacy_indirect,
    requirements,
    subthroughflow,
    transactions,
)

A = np.array([[0, 0.1, 0], [0, 0, 0.2], [0.3, 0, 0]])
F = np.array([10.0, 20.0, 30.0])


@pytest.fixture
def hyp():
    return from_coefficients(A, F)


def test_labels_and_string_arguments(hyp):
    r = requirements(hyp, "indirect", "composite")
    assert r.kind is Kind.INDIRECT and r.frame is Frame.COMPOSITE
    assert r.label == "composite-indirect"
    with pytest.raises(ValueError):
        requirements(hyp, "total", "simple")


def test_composite_direct_is_A(hyp):
    assert np.array_equal(requirements(hyp, Kind.DIRECT, Frame.COMPOSITE).values, hyp.A)


def test_composite_direct_transactions_are_Z(hyp):
    assert np.array_equal(transactions(hyp, "direct", "composite").values, hyp.Z)


def test_subthroughflow(hyp):
    T = subthroughflow(hyp)
    assert np.allclose(T.values.sum(axis=1), hyp.x, rtol=1e-12)
    assert np.allclose(T.diag, np.diag(hyp.L) * F)


def test_legacy_variants(hyp):
    L, eye = hyp.L, np.eye(3)
    assert legacy_indirect(hyp, "e1") is requirements(hyp, "transfer", "simple").values
    assert np.allclose(legacy_indirect(hyp, LegacyVariant.E2), L - A)
    assert np.allclose(legacy_indirect(hyp, "E3"), L - eye - A)
    assert np.allclose(legacy_indirect(hyp, "e4"), L - np.diag(np.diag(L)))


def test_cycling_coefficients(hyp):
    # on the 3-cycle every return trip has length 3, so cycling = (L - I)_ii
    assert np.allclose(cycling_coefficients(hyp, "simple"), np.diag(hyp.L) - 1, atol=1e-15)


def test_results_are_cached(hyp):
    assert requirements(hyp, "direct", "simple").values is requirements(hyp, "direct", "simple").values


@settings(max_examples=60, deadline=None)
@given(viable_systems())
def test_identities(args):
    a, f = args
    s = from_coefficients(a, f)
    n = s.n
    L, Lh = s.L, np.diag(np.diag(s.L))
    for frame in Frame:
        d, i, t = (requirements(s, k, frame).values for k in (Kind.DIRECT, Kind.INDIRECT, Kind.TRANSFER))
        assert np.max(abs(t - d - i)) <= 1e-12
        for kind in Kind:
            g1 = diact_gross_outputs(s, kind, frame)
            g2 = diact_gross_outputs_via_requirements(s, kind, frame)
            assert np.max(abs(g1 - g2)) <= 1e-12 * max(1.0, np.max(abs(g1)))
    assert np.array_equal(requirements(s, "transfer", "simple").values, L - np.eye(n))
    for kind in Kind:
        bridge = requirements(s, kind, "composite").values @ Lh
        assert np.max(abs(bridge - requirements(s, kind, "simple").values)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(viable_systems(n_max=8))
def test_nonnegativity(args):
    s = from_coefficients(*args)
    for frame in Frame:
        for kind in Kind:
            assert requirements(s, kind, frame).values.min() >= -1e-12
