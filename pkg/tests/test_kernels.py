import os
import subprocess
import sys

import numpy as np
import pytest

from diact import kernels, matrix_core


def naive_matmul(a, b):
    out = np.zeros((a.shape[0], b.shape[1]))
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            for k in range(a.shape[1]):
                out[i, j] += a[i, k] * b[k, j]
    return out


@pytest.mark.parametrize("shape", [(1, 1, 1), (3, 4, 2), (7, 7, 7)])
def test_matmul_matches_triple_loop(backend, rng, shape):
    m, k, n = shape
    a, b = rng.normal(size=(m, k)), rng.normal(size=(k, n))
    assert np.allclose(kernels.matmul(a, b), naive_matmul(a, b), atol=1e-13)


def test_lu_reconstructs(backend, rng):
    m = rng.normal(size=(6, 6))
    lu, perm = matrix_core.lu_factor(m)
    lower = np.tril(lu, -1) + np.eye(6)
    upper = np.triu(lu)
    assert np.allclose(lower @ upper, m[perm], atol=1e-12)


def test_inverse_round_trip(backend, rng):
    m = rng.normal(size=(8, 8)) + 8 * np.eye(8)
    inv = matrix_core.invert(m)
    assert np.allclose(naive_matmul(m, inv), np.eye(8), atol=1e-12)


def test_pivoting_handles_zero_leading_entry(backend):
    m = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert np.array_equal(matrix_core.invert(m), m)


def test_singular_is_reported(backend):
    with pytest.raises(matrix_core.SingularMatrixError):
        matrix_core.invert(np.array([[1.0, 2.0], [2.0, 4.0]]))


def test_power_iteration_on_cyclic_matrix(backend):
    # 3-cycle: A^3 = 0.006 I, so all eigenvalues share modulus 0.006^(1/3)
    a = np.array([[0, 0.1, 0], [0, 0, 0.2], [0.3, 0, 0]])
    assert matrix_core.spectral_radius_bound(a) == pytest.approx(0.006 ** (1 / 3), rel=1e-8)


def test_power_iteration_matches_eigvals(backend, rng):
    a = rng.uniform(0, 1, (9, 9))
    assert matrix_core.spectral_radius_bound(a) == pytest.approx(max(abs(np.linalg.eigvals(a))), rel=1e-8)


def test_series_kernels(backend):
    a = np.array([[0.1, 0.2], [0.3, 0.1]])
    exact = np.linalg.inv(np.eye(2) - a)
    assert np.allclose(kernels.series_partial(a, 1), np.eye(2))
    assert np.allclose(kernels.series_partial(a, 2), np.eye(2) + a)
    total, terms, resid = kernels.series_converge(a, exact, 1e-10, 10_000)
    assert resid < 1e-10 and terms > 2
    assert kernels.inf_norm_diff(total, exact) == pytest.approx(resid)


def test_backends_agree(rng):
    if "numba" not in kernels.IMPLEMENTATIONS:
        pytest.skip("numba unavailable")
    nb, npy = kernels.IMPLEMENTATIONS["numba"], kernels.IMPLEMENTATIONS["numpy"]
    m = rng.uniform(0, 0.1, (12, 12))
    assert np.allclose(nb.matmul(m, m), npy.matmul(m, m), atol=1e-14)
    lu1, p1, i1 = nb.lu_factor(m + np.eye(12), 1e-12)
    lu2, p2, i2 = npy.lu_factor(m + np.eye(12), 1e-12)
    assert i1 == i2 == 0 and np.array_equal(p1, p2) and np.allclose(lu1, lu2, atol=1e-14)
    r1, _ = nb.power_iteration(m, 1.0, 1e-9, 10_000)
    r2, _ = npy.power_iteration(m, 1.0, 1e-9, 10_000)
    assert r1 == pytest.approx(r2, rel=1e-8)


def test_env_flag_selects_numpy():
    out = subprocess.run(
        [sys.executable, "-c", "import diact.kernels as k; print(k.BACKEND)"],
        env={**os.environ, "DIACT_DISABLE_NUMBA": "1"},
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
