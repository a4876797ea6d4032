import numpy as np
import pytest
from hypothesis import strategies as st

from diact import kernels


def random_coefficients(rng, n, density=0.6, rho_max=0.9):
    """Nonnegative A with entries in [0.2, 1] on a random support, scaled so rho(A) <= rho_max."""
    mask = rng.random((n, n)) < density
    a = np.where(mask, rng.uniform(0.2, 1.0, (n, n)), 0.0)
    # independent eigen-solver, not the package's power iteration
    rho = max(abs(np.linalg.eigvals(a))) if a.any() else 0.0
    if rho > 0:
        a *= rng.uniform(0.05, rho_max) / rho
    return a


def random_system_args(rng, n):
    return random_coefficients(rng, n), rng.uniform(0.5, 10.0, n)


@st.composite
def viable_systems(draw, n_min=2, n_max=12):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(n_min, n_max))
    return random_system_args(np.random.default_rng(seed), n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=sorted(kernels.IMPLEMENTATIONS))
def backend(request, monkeypatch):
    """Route the module-level kernel aliases through one implementation."""
    impl = kernels.IMPLEMENTATIONS[request.param]
    if impl is None:
        pytest.skip(f"{request.param} backend unavailable")
    for name in ("matmul", "lu_factor", "lu_solve", "power_iteration",
                 "series_partial", "series_converge", "inf_norm_diff"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
