"""Power-series oracle for the Leontief inverse.

Nothing here solves a linear system: ``L`` is approximated by accumulating
``I + A + A^2 + ...`` with a single running power, so agreement with the LU
route in :mod:`diact.matrix_core` is an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import SeriesNotConvergedError, ValidationError
from .io_model import IoSystem
from .matrix_core import as_matrix, inf_norm

TERM_CAP = 1_000_000


@dataclass(frozen=True)
class SeriesReport:
    terms_used: int
    residual_inf_norm: float
    converged: bool
    e1_residual: float
    e3_residual: float


def truncated_leontief(A, n_terms: int) -> np.ndarray:
    """``sum(A**k for k in range(n_terms))``."""
    A = as_matrix(A, "A")
    if A.shape[0] != A.shape[1]:
        raise ValidationError("A must be square")
    if n_terms < 1:
        raise ValidationError("n_terms must be at least 1")
    return kernels.series_partial(A, int(n_terms))


def matrix_power(A, n: int) -> np.ndarray:
    A = as_matrix(A, "A")
    out = np.eye(A.shape[0])
    for _ in range(n):
        out = kernels.matmul(out, A)
    return out


def propagation_round(system: IoSystem, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Round ``n`` of demand propagation: ``(A^n diag(f), A^n f)``."""
    if n < 0:
        raise ValidationError("round index must be nonnegative")
    An = matrix_power(system.A, n)
    dist = An * system.f[None, :]
    return dist, dist.sum(axis=1)


def verify_system(system: IoSystem, tol: float = 1e-8, cap: int = TERM_CAP,
                  raise_on_failure: bool = True) -> SeriesReport:
    """Sum the series until it is within ``tol`` of ``system.L`` (infinity norm).

    Also compares the trimmed series ``A + A^2 + ...`` and ``A^2 + A^3 + ...``
    against ``L - I`` and ``L - I - A``.
    """
    A = system.A
    L = np.ascontiguousarray(system.L)
    partial, terms, resid = kernels.series_converge(A, L, float(tol), int(cap))
    converged = bool(resid < tol)
    if not converged and raise_on_failure:
        raise SeriesNotConvergedError(
            f"series residual {resid:.3g} still above {tol:g} after {terms} terms; "
            "spectral radius is too close to 1"
        )
    eye = np.eye(system.n)
    e1 = partial - eye
    e3 = e1 - A
    e1_res = inf_norm(e1 - (L - eye))
    e3_res = inf_norm(e3 - ((L - eye) - A))
    return SeriesReport(int(terms), float(resid), converged, e1_res, e3_res)
