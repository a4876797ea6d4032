"""Simple and composite direct, indirect and transfer requirements.

Simple matrices are normalised by final demand, composite ones by gross
output. With ``L`` the Leontief inverse and ``Lh`` its diagonal:

=========  ====================  ======================
kind       simple                composite
=========  ====================  ======================
direct     ``A Lh``              ``A``
transfer   ``L - I``             ``(L - I) Lh^-1``
indirect   transfer - direct     transfer - direct
=========  ====================  ======================

Transactions are the requirements scaled column-wise by ``f`` (simple) or
``x`` (composite). All six matrices of a system are computed together from
one ``(A, L, Lh)`` and memoised on the system, so complementarity holds to
rounding rather than to independent-solve accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .io_model import IoSystem, _frozen
from .matrix_core import multiply


class Kind(str, Enum):
    DIRECT = "direct"
    INDIRECT = "indirect"
    TRANSFER = "transfer"


class Frame(str, Enum):
    SIMPLE = "simple"
    COMPOSITE = "composite"


class LegacyVariant(str, Enum):
    """Older indirect-effects matrices built by trimming the Leontief series."""

    E1 = "e1"  # L - I
    E2 = "e2"  # L - A
    E3 = "e3"  # L - I - A
    E4 = "e4"  # L - diag(L)


@dataclass(frozen=True)
class RequirementsMatrix:
    kind: Kind
    frame: Frame
    values: np.ndarray

    @property
    def label(self) -> str:
        return f"{self.frame.value}-{self.kind.value}"


@dataclass(frozen=True)
class TransactionsMatrix:
    kind: Kind
    frame: Frame
    values: np.ndarray

    @property
    def label(self) -> str:
        return f"{self.frame.value}-{self.kind.value}"


@dataclass(frozen=True)
class Subthroughflow:
    """``T = L diag(f)``: column ``k`` is the output drawn from each sector by ``f_k``."""

    values: np.ndarray
    diag: np.ndarray


def _requirement_set(system: IoSystem) -> dict[tuple[Kind, Frame], np.ndarray]:
    cache = system._cache
    if "requirements" in cache:
        return cache["requirements"]
    n = system.n
    A, L, ld = system.A, system.L, system.L_diag
    transfer_s = L - np.eye(n)
    direct_s = A * ld[None, :]
    transfer_c = transfer_s / ld[None, :]
    out = {
        (Kind.TRANSFER, Frame.SIMPLE): transfer_s,
        (Kind.DIRECT, Frame.SIMPLE): direct_s,
        (Kind.INDIRECT, Frame.SIMPLE): transfer_s - direct_s,
        (Kind.TRANSFER, Frame.COMPOSITE): transfer_c,
        (Kind.DIRECT, Frame.COMPOSITE): A,
        (Kind.INDIRECT, Frame.COMPOSITE): transfer_c - A,
    }
    out = {key: _frozen(val) for key, val in out.items()}
    cache["requirements"] = out
    return out


def requirements(system: IoSystem, kind: Kind | str, frame: Frame | str) -> RequirementsMatrix:
    kind, frame = Kind(kind), Frame(frame)
    return RequirementsMatrix(kind, frame, _requirement_set(system)[kind, frame])


def simple_requirements(system: IoSystem, kind: Kind | str) -> RequirementsMatrix:
    return requirements(system, kind, Frame.SIMPLE)


def composite_requirements(system: IoSystem, kind: Kind | str) -> RequirementsMatrix:
    return requirements(system, kind, Frame.COMPOSITE)


def subthroughflow(system: IoSystem) -> Subthroughflow:
    T = system.L * system.f[None, :]
    return Subthroughflow(_frozen(T), _frozen(np.diag(T)))


def transactions(system: IoSystem, kind: Kind | str, frame: Frame | str) -> TransactionsMatrix:
    """Requirements matrix right-multiplied by ``diag(f)`` or ``diag(x)``.

    Composite direct transactions are the intermediate flows ``Z`` themselves.
    """
    req = requirements(system, kind, frame)
    if req.frame is Frame.COMPOSITE and req.kind is Kind.DIRECT:
        values = system.Z
    else:
        scale = system.f if req.frame is Frame.SIMPLE else system.x
        values = _frozen(req.values * scale[None, :])
    return TransactionsMatrix(req.kind, req.frame, values)


def diact_gross_outputs(system: IoSystem, kind: Kind | str, frame: Frame | str) -> np.ndarray:
    """Row sums of the transactions matrix of the given kind and frame."""
    return _frozen(transactions(system, kind, frame).values.sum(axis=1))


def diact_gross_outputs_via_requirements(system: IoSystem, kind: Kind | str,
                                         frame: Frame | str) -> np.ndarray:
    """Same quantity as :func:`diact_gross_outputs`, computed as ``N f`` or ``N x``."""
    req = requirements(system, kind, frame)
    rhs = system.f if req.frame is Frame.SIMPLE else system.x
    return multiply(req.values, rhs)


def legacy_indirect(system: IoSystem, variant: LegacyVariant | str) -> np.ndarray:
    if not isinstance(variant, LegacyVariant):
        variant = LegacyVariant(str(variant).lower())
    if variant is LegacyVariant.E1:
        return _requirement_set(system)[Kind.TRANSFER, Frame.SIMPLE]
    L, A = system.L, system.A
    if variant is LegacyVariant.E2:
        out = L - A
    elif variant is LegacyVariant.E3:
        out = (L - np.eye(system.n)) - A
    else:
        out = L - np.diag(system.L_diag)
    return _frozen(out)


def cycling_coefficients(system: IoSystem, frame: Frame | str) -> np.ndarray:
    """Diagonal of the indirect requirements: flow a sector sends back to itself through others."""
    return _frozen(np.diag(requirements(system, Kind.INDIRECT, frame).values))
