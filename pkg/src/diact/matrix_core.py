"""Dense real-matrix helpers used by every other module.

Matrices are plain ``float64`` numpy arrays. The functions here validate shape
and finiteness, then hand the arithmetic to :mod:`diact.kernels`.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DimensionError, SingularMatrixError, ValidationError

#: Pivots with magnitude below this are treated as zero.
SINGULAR_PIVOT = 1e-12
#: Convergence settings for :func:`spectral_radius_bound`.
POWER_RTOL = 1e-9
POWER_MAXITER = 10_000


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Return ``m`` as a finite 2-D float64 array (copying only when needed)."""
    arr = np.asarray(m, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"{name} must be a non-empty 2-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains NaN or infinite entries")
    return np.ascontiguousarray(arr)


def as_vector(v, name: str = "vector") -> np.ndarray:
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise DimensionError(f"{name} must be a non-empty 1-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains NaN or infinite entries")
    return np.ascontiguousarray(arr)


def _square(m: np.ndarray, name: str) -> None:
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {m.shape}")


def multiply(a, b) -> np.ndarray:
    """Matrix product ``a @ b``.

    A 1-D ``b`` is treated as a column vector and a 1-D result is returned.
    """
    a = as_matrix(a, "left operand")
    vec = np.ndim(b) == 1
    b = as_vector(b, "right operand")[:, None] if vec else as_matrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    out = kernels.matmul(a, b)
    return out[:, 0] if vec else out


def lu_factor(m):
    """LU factorisation with partial pivoting.

    Returns ``(lu, perm)`` where ``lu`` packs the unit lower and upper factors
    and ``m[perm] == L @ U``.
    """
    m = as_matrix(m)
    _square(m, "matrix")
    lu, perm, info = kernels.lu_factor(m, SINGULAR_PIVOT)
    if info:
        raise SingularMatrixError(
            f"matrix is singular: pivot {info} has magnitude below {SINGULAR_PIVOT:g}"
        )
    return lu, perm


def invert(m) -> np.ndarray:
    lu, perm = lu_factor(m)
    return kernels.lu_solve(lu, perm, np.eye(lu.shape[0]))


def solve(m, b) -> np.ndarray:
    """Solve ``m @ x = b`` for a vector or matrix right-hand side."""
    lu, perm = lu_factor(m)
    vec = np.ndim(b) == 1
    rhs = as_vector(b)[:, None] if vec else as_matrix(b)
    if rhs.shape[0] != lu.shape[0]:
        raise DimensionError(f"right-hand side has {rhs.shape[0]} rows, expected {lu.shape[0]}")
    x = kernels.lu_solve(lu, perm, rhs)
    return x[:, 0] if vec else x


def diag_of(m) -> np.ndarray:
    """Diagonal matrix that keeps the diagonal of ``m`` and zeros the rest."""
    m = as_matrix(m)
    _square(m, "matrix")
    return np.diag(np.diag(m).copy())


def diag_from(v) -> np.ndarray:
    return np.diag(as_vector(v))


def inf_norm(m) -> float:
    """Maximum absolute row sum."""
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    return float(np.max(np.sum(np.abs(m), axis=1)))


def spectral_radius_bound(m) -> float:
    """Dominant eigenvalue magnitude of a nonnegative square matrix.

    Power iteration runs on ``m + I``: for nonnegative ``m`` the Perron root
    is the only eigenvalue of maximal modulus after the shift, so cyclic
    (periodic) matrices converge too. Stops at a relative change of
    ``POWER_RTOL`` or after ``POWER_MAXITER`` sweeps. On defective
    matrices (nontrivial Jordan blocks, e.g. nilpotent ``m``) convergence is
    only ``O(1/k)``, so the estimate may overshoot by about ``1/POWER_MAXITER``.
    """
    m = as_matrix(m)
    _square(m, "matrix")
    if np.any(m < 0):
        raise ValidationError("spectral_radius_bound requires a nonnegative matrix")
    rho, _ = kernels.power_iteration(m, 1.0, POWER_RTOL, POWER_MAXITER)
    return max(float(rho), 0.0)
