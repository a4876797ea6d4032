"""Requirements from use and make tables under the industry-technology assumption.

``U`` is commodities x industries, ``V`` is industries x commodities. Market
shares ``D = V diag(V' 1)^-1`` and absorption coefficients
``B = U diag(V 1)^-1`` give the industry-by-industry coefficients ``A = D B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionError, ValidationError, ViabilityError
from .io_model import IoSystem, _frozen, from_coefficients
from .matrix_core import as_matrix, invert, multiply, spectral_radius_bound
from .requirements import Frame, Kind, RequirementsMatrix


@dataclass(frozen=True)
class MakeUseTables:
    U: np.ndarray
    V: np.ndarray
    commodity_names: tuple[str, ...] = field(default=())
    industry_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        U = as_matrix(self.U, "use table U")
        V = as_matrix(self.V, "make table V")
        c, m = U.shape
        if V.shape != (m, c):
            raise DimensionError(f"make table must be {m}x{c} to match use table {U.shape}, got {V.shape}")
        if np.any(U < 0) or np.any(V < 0):
            raise ValidationError("use and make tables must be nonnegative")
        if np.any(V.sum(axis=1) <= 0):
            raise ValidationError("every industry must have positive total output (row sums of V)")
        if np.any(V.sum(axis=0) <= 0):
            raise ValidationError("every commodity must have positive total output (column sums of V)")
        cnames = tuple(self.commodity_names) or tuple(f"c{j + 1}" for j in range(c))
        inames = tuple(self.industry_names) or tuple(f"i{j + 1}" for j in range(m))
        if len(cnames) != c or len(inames) != m:
            raise DimensionError("name lists do not match table dimensions")
        object.__setattr__(self, "U", _frozen(U))
        object.__setattr__(self, "V", _frozen(V))
        object.__setattr__(self, "commodity_names", cnames)
        object.__setattr__(self, "industry_names", inames)


@dataclass(frozen=True)
class TechnologyMatrices:
    D: np.ndarray  # market shares, industries x commodities
    B: np.ndarray  # absorption coefficients, commodities x industries


def technology(tables: MakeUseTables) -> TechnologyMatrices:
    V, U = tables.V, tables.U
    commodity_out = V.sum(axis=0)
    industry_out = V.sum(axis=1)
    D = V / commodity_out[None, :]
    B = U / industry_out[None, :]
    return TechnologyMatrices(_frozen(D), _frozen(B))


def coefficients_from_make_use(tables: MakeUseTables) -> np.ndarray:
    tech = technology(tables)
    return _frozen(multiply(tech.D, tech.B))


def requirements_from_make_use(tables: MakeUseTables, kind: Kind | str,
                               frame: Frame | str) -> RequirementsMatrix:
    """Requirements written directly in terms of ``D`` and ``B``.

    The simple direct matrix is ``D B diag((I - D B)^-1)``, i.e. the
    coefficients scaled by the diagonal of the Leontief inverse.
    """
    kind, frame = Kind(kind), Frame(frame)
    DB = coefficients_from_make_use(tables)
    rho = spectral_radius_bound(DB)
    if rho >= 1.0:
        raise ViabilityError(f"spectral radius of D B is {rho:.6g} >= 1; system is not viable")
    n = DB.shape[0]
    inv = invert(np.eye(n) - DB)
    inv_diag = np.diag(inv)
    if frame is Frame.SIMPLE:
        transfer = inv - np.eye(n)
        direct = DB * inv_diag[None, :]
    else:
        transfer = (inv - np.eye(n)) / inv_diag[None, :]
        direct = DB
    values = {Kind.TRANSFER: transfer, Kind.DIRECT: direct, Kind.INDIRECT: transfer - direct}[kind]
    return RequirementsMatrix(kind, frame, _frozen(values))


def system_from_make_use(tables: MakeUseTables, f, *,
                         allow_negative_final_demand: bool = False) -> IoSystem:
    """Industry-by-industry system; ``f`` must already be in industry terms."""
    return from_coefficients(coefficients_from_make_use(tables), f, tables.industry_names,
                             allow_negative_final_demand=allow_negative_final_demand)
