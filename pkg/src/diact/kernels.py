"""Hot numeric kernels with a numba path and a pure-numpy fallback.

Every kernel exists twice: an explicit-loop version compiled with
``numba.njit`` and a vectorised numpy version. The active pair is picked once
at import time; set ``DIACT_DISABLE_NUMBA=1`` to force the numpy path (or run
without numba installed). Both pairs are always reachable through
:data:`IMPLEMENTATIONS` so tests and benchmarks can compare them.

Kernels never raise on numerical trouble. They return status codes instead
(LAPACK style) and the callers in :mod:`diact.matrix_core` turn those into
exceptions.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = os.environ.get("DIACT_DISABLE_NUMBA", "").strip().lower()
HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and _FLAG not in {"1", "true", "yes", "on"}
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# loop versions (compiled by numba)
# ---------------------------------------------------------------------------

def _matmul_loop(a, b):
    n, m = a.shape
    p = b.shape[1]
    out = np.zeros((n, p))
    for i in range(n):
        for k in range(m):
            aik = a[i, k]
            if aik == 0.0:
                continue
            for j in range(p):
                out[i, j] += aik * b[k, j]
    return out


def _lu_factor_loop(a, tol):
    n = a.shape[0]
    lu = a.copy()
    perm = np.arange(n)
    for k in range(n):
        p = k
        best = abs(lu[k, k])
        for r in range(k + 1, n):
            v = abs(lu[r, k])
            if v > best:
                best = v
                p = r
        if best < tol:
            return lu, perm, k + 1
        if p != k:
            for c in range(n):
                tmp = lu[k, c]
                lu[k, c] = lu[p, c]
                lu[p, c] = tmp
            tp = perm[k]
            perm[k] = perm[p]
            perm[p] = tp
        pivot = lu[k, k]
        for r in range(k + 1, n):
            lu[r, k] /= pivot
            f = lu[r, k]
            if f != 0.0:
                for c in range(k + 1, n):
                    lu[r, c] -= f * lu[k, c]
    return lu, perm, 0


def _lu_solve_loop(lu, perm, b):
    n = lu.shape[0]
    m = b.shape[1]
    x = np.empty((n, m))
    for i in range(n):
        for j in range(m):
            x[i, j] = b[perm[i], j]
    # unit lower triangle
    for i in range(n):
        for k in range(i):
            lik = lu[i, k]
            if lik != 0.0:
                for j in range(m):
                    x[i, j] -= lik * x[k, j]
    for i in range(n - 1, -1, -1):
        for k in range(i + 1, n):
            uik = lu[i, k]
            if uik != 0.0:
                for j in range(m):
                    x[i, j] -= uik * x[k, j]
        d = lu[i, i]
        for j in range(m):
            x[i, j] /= d
    return x


def _power_iteration_loop(m, shift, rtol, maxiter):
    n = m.shape[0]
    x = np.ones(n)
    y = np.empty(n)
    lam_prev = -1.0
    lam = 0.0
    it = 0
    while it < maxiter:
        it += 1
        top = 0.0
        for i in range(n):
            s = shift * x[i]
            for j in range(n):
                s += m[i, j] * x[j]
            y[i] = s
            if abs(s) > top:
                top = abs(s)
        lam = top
        if lam == 0.0:
            return 0.0 - shift, it
        for i in range(n):
            x[i] = y[i] / lam
        if abs(lam - lam_prev) <= rtol * lam:
            break
        lam_prev = lam
    return lam - shift, it


def _inf_norm_diff_loop(a, b):
    best = 0.0
    for i in range(a.shape[0]):
        s = 0.0
        for j in range(a.shape[1]):
            s += abs(a[i, j] - b[i, j])
        if s > best:
            best = s
    return best


# ---------------------------------------------------------------------------
# numpy versions
# ---------------------------------------------------------------------------

def _matmul_np(a, b):
    return a @ b


def _lu_factor_np(a, tol):
    n = a.shape[0]
    lu = np.array(a, dtype=np.float64, copy=True)
    perm = np.arange(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) < tol:
            return lu, perm, k + 1
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm, 0


def _lu_solve_np(lu, perm, b):
    n = lu.shape[0]
    x = np.array(b[perm], dtype=np.float64)
    for i in range(n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] -= lu[i, i + 1:] @ x[i + 1:]
        x[i] /= lu[i, i]
    return x


def _power_iteration_np(m, shift, rtol, maxiter):
    b = m + shift * np.eye(m.shape[0])
    x = np.ones(m.shape[0])
    lam_prev = -1.0
    lam = 0.0
    it = 0
    while it < maxiter:
        it += 1
        y = b @ x
        lam = float(np.max(np.abs(y)))
        if lam == 0.0:
            return 0.0 - shift, it
        x = y / lam
        if abs(lam - lam_prev) <= rtol * lam:
            break
        lam_prev = lam
    return lam - shift, it


def _series_partial_np(a, n_terms):
    n = a.shape[0]
    total = np.eye(n)
    power = np.eye(n)
    for _ in range(n_terms - 1):
        power = power @ a
        total += power
    return total


def _inf_norm_diff_np(a, b):
    return float(np.max(np.sum(np.abs(a - b), axis=1)))


def _series_converge_np(a, target, tol, cap):
    n = a.shape[0]
    total = np.eye(n)
    power = np.eye(n)
    terms = 1
    resid = _inf_norm_diff_np(total, target)
    while resid >= tol and terms < cap:
        power = power @ a
        total += power
        terms += 1
        resid = _inf_norm_diff_np(total, target)
    return total, terms, resid


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

NUMPY = SimpleNamespace(
    name="numpy",
    matmul=_matmul_np,
    lu_factor=_lu_factor_np,
    lu_solve=_lu_solve_np,
    power_iteration=_power_iteration_np,
    series_partial=_series_partial_np,
    series_converge=_series_converge_np,
    inf_norm_diff=_inf_norm_diff_np,
)

if HAVE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    _matmul_nb = _jit(_matmul_loop)
    _inf_norm_diff_nb = _jit(_inf_norm_diff_loop)

    # The series kernels call the matmul kernel, so they get their own
    # compiled bodies that reference the jitted helpers directly.
    @numba.njit(cache=True, nogil=True)
    def _series_partial_nb(a, n_terms):
        n = a.shape[0]
        total = np.eye(n)
        power = np.eye(n)
        for _ in range(n_terms - 1):
            power = _matmul_nb(power, a)
            for i in range(n):
                for j in range(n):
                    total[i, j] += power[i, j]
        return total

    @numba.njit(cache=True, nogil=True)
    def _series_converge_nb(a, target, tol, cap):
        n = a.shape[0]
        total = np.eye(n)
        power = np.eye(n)
        terms = 1
        resid = _inf_norm_diff_nb(total, target)
        while resid >= tol and terms < cap:
            power = _matmul_nb(power, a)
            for i in range(n):
                for j in range(n):
                    total[i, j] += power[i, j]
            terms += 1
            resid = _inf_norm_diff_nb(total, target)
        return total, terms, resid

    NUMBA = SimpleNamespace(
        name="numba",
        matmul=_matmul_nb,
        lu_factor=_jit(_lu_factor_loop),
        lu_solve=_jit(_lu_solve_loop),
        power_iteration=_jit(_power_iteration_loop),
        series_partial=_series_partial_nb,
        series_converge=_series_converge_nb,
        inf_norm_diff=_inf_norm_diff_nb,
    )
    IMPLEMENTATIONS = {"numba": NUMBA, "numpy": NUMPY}
else:  # pragma: no cover
    NUMBA = None
    IMPLEMENTATIONS = {"numpy": NUMPY}

active = NUMBA if USE_NUMBA else NUMPY

matmul = active.matmul
lu_factor = active.lu_factor
lu_solve = active.lu_solve
power_iteration = active.power_iteration
series_partial = active.series_partial
series_converge = active.series_converge
inf_norm_diff = active.inf_norm_diff
