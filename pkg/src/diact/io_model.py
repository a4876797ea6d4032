"""Input-output systems: balance, technical coefficients and the Leontief inverse."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionError, SingularMatrixError, ValidationError, ViabilityError
from .matrix_core import as_matrix, as_vector, invert, multiply, spectral_radius_bound

#: Entries of a computed Leontief inverse above ``-NONNEG_SLACK`` count as nonnegative.
NONNEG_SLACK = 1e-12


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.float64, copy=True)
    arr.setflags(write=False)
    return arr


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"s{i + 1}" for i in range(n))


def _names(names: Sequence[str] | None, n: int) -> tuple[str, ...]:
    if names is None:
        return _default_names(n)
    names = tuple(str(s) for s in names)
    if len(names) != n:
        raise DimensionError(f"expected {n} sector names, got {len(names)}")
    return names


@dataclass(frozen=True, eq=False)
class IoSystem:
    """A validated economy.

    Orientation is row-to-column: ``Z[i, k]`` is the flow from producer ``i``
    to consumer ``k``. All arrays are read-only.
    """

    sector_names: tuple[str, ...]
    Z: np.ndarray
    f: np.ndarray
    x: np.ndarray
    A: np.ndarray
    L: np.ndarray
    spectral_radius: float
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def L_diag(self) -> np.ndarray:
        """Diagonal of the Leontief inverse as a vector."""
        if "L_diag" not in self._cache:
            self._cache["L_diag"] = _frozen(np.diag(self.L))
        return self._cache["L_diag"]

    @property
    def L_hat(self) -> np.ndarray:
        return np.diag(self.L_diag)

    def permuted(self, order: Sequence[int]) -> "IoSystem":
        """Same economy with sectors re-ordered by ``order``."""
        p = np.asarray(order)
        if sorted(p.tolist()) != list(range(self.n)):
            raise ValidationError("order must be a permutation of range(n)")
        return from_transactions(
            self.Z[np.ix_(p, p)], self.f[p], [self.sector_names[i] for i in p],
            allow_negative_final_demand=True,
        )


@dataclass(frozen=True)
class ViabilityReport:
    spectral_radius: float
    hawkins_simon_minors_positive: bool
    leontief_nonnegative: bool

    @property
    def viable(self) -> bool:
        return self.spectral_radius < 1.0


def _check_nonnegative(arr: np.ndarray, name: str) -> None:
    if np.any(arr < 0):
        i = np.unravel_index(int(np.argmin(arr)), arr.shape)
        raise ValidationError(f"{name} must be nonnegative; entry {tuple(int(j) for j in i)} is {arr[i]:g}")


def _leontief(A: np.ndarray) -> tuple[np.ndarray, float]:
    rho = spectral_radius_bound(A)
    if rho >= 1.0:
        raise ViabilityError(f"spectral radius of A is {rho:.6g} >= 1; system is not viable")
    return invert(np.eye(A.shape[0]) - A), rho


def from_transactions(Z, f, names: Sequence[str] | None = None, *,
                      allow_negative_final_demand: bool = False) -> IoSystem:
    """Build a system from intermediate flows and final demand.

    Gross output is ``Z @ 1 + f`` and the technical coefficients are
    ``Z`` with each column divided by that column's gross output.
    """
    Z = as_matrix(Z, "transactions matrix Z")
    f = as_vector(f, "final demand f")
    n = Z.shape[0]
    if Z.shape != (n, n):
        raise DimensionError(f"transactions matrix must be square, got {Z.shape}")
    if f.shape[0] != n:
        raise DimensionError(f"final demand has length {f.shape[0]}, expected {n}")
    _check_nonnegative(Z, "transactions matrix Z")
    if not allow_negative_final_demand:
        _check_nonnegative(f, "final demand f")
    x = Z.sum(axis=1) + f
    if np.any(x <= 0):
        bad = [int(i) + 1 for i in np.flatnonzero(x <= 0)]
        raise ValidationError(f"gross output must be positive; sectors {bad} have x <= 0")
    A = Z / x[None, :]
    L, rho = _leontief(A)
    return IoSystem(_names(names, n), _frozen(Z), _frozen(f), _frozen(x), _frozen(A), _frozen(L), rho)


def from_coefficients(A, f, names: Sequence[str] | None = None, *,
                      allow_negative_final_demand: bool = False) -> IoSystem:
    """Build a system from technical coefficients and final demand.

    ``x = L f`` and ``Z = A diag(x)``. Sectors with zero gross output are
    allowed here because no division by ``x`` is needed.
    """
    A = as_matrix(A, "coefficients matrix A")
    f = as_vector(f, "final demand f")
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimensionError(f"coefficients matrix must be square, got {A.shape}")
    if f.shape[0] != n:
        raise DimensionError(f"final demand has length {f.shape[0]}, expected {n}")
    _check_nonnegative(A, "coefficients matrix A")
    if not allow_negative_final_demand:
        _check_nonnegative(f, "final demand f")
    L, rho = _leontief(A)
    x = multiply(L, f)
    Z = A * x[None, :]
    return IoSystem(_names(names, n), _frozen(Z), _frozen(f), _frozen(x), _frozen(A), _frozen(L), rho)


def _leading_minors_positive(m: np.ndarray) -> bool:
    # Elimination without pivoting: the k-th leading minor is the product of
    # the first k pivots, so all minors are positive iff every pivot is.
    u = np.array(m, dtype=np.float64, copy=True)
    n = u.shape[0]
    for k in range(n):
        if not u[k, k] > 0.0:
            return False
        u[k + 1:, k:] -= np.outer(u[k + 1:, k] / u[k, k], u[k, k:])
    return True


def viability(A) -> ViabilityReport:
    """Diagnostics for a coefficient matrix; never raises on a non-viable ``A``."""
    A = as_matrix(A, "coefficients matrix A")
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"coefficients matrix must be square, got {A.shape}")
    _check_nonnegative(A, "coefficients matrix A")
    rho = spectral_radius_bound(A)
    i_minus_a = np.eye(A.shape[0]) - A
    try:
        L = invert(i_minus_a)
        nonneg = bool(np.all(L >= -NONNEG_SLACK))
    except SingularMatrixError:
        nonneg = False
    return ViabilityReport(rho, _leading_minors_positive(i_minus_a), nonneg)
