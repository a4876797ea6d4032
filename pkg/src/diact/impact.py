"""Response of the system to a disaggregated segment of final demand or gross output."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DimensionError, UnsupportedCombinationError, ValidationError
from .io_model import IoSystem, _frozen
from .matrix_core import as_vector
from .requirements import Frame, Kind, requirements

CUMULATIVE = "cumulative"
ImpactKind = Union[Kind, str]


@dataclass(frozen=True)
class DemandSegment:
    """A slice of final demand (simple frame) or of gross output (composite frame).

    Negative entries describe a shock rather than a segment of existing demand,
    so they are refused unless ``allow_negative`` is set.
    """

    frame: Frame
    delta: np.ndarray
    allow_negative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "frame", Frame(self.frame))
        delta = as_vector(self.delta, "segment")
        if not self.allow_negative and np.any(delta < 0):
            raise ValidationError("segment has negative entries; pass allow_negative=True to permit")
        object.__setattr__(self, "delta", _frozen(delta))


@dataclass(frozen=True)
class ImpactResult:
    kind: str
    frame: Frame
    delta_T: np.ndarray
    delta_x: np.ndarray


def _parse_kind(kind: ImpactKind) -> str:
    value = kind.value if isinstance(kind, Kind) else str(kind).lower()
    if value != CUMULATIVE:
        Kind(value)
    return value


def _check_length(system: IoSystem, seg: DemandSegment) -> None:
    if seg.delta.shape[0] != system.n:
        raise DimensionError(f"segment has length {seg.delta.shape[0]}, system has {system.n} sectors")


def final_demand_impact(system: IoSystem, seg: DemandSegment, kind: ImpactKind) -> ImpactResult:
    """``dT = N diag(df)`` and ``dx = dT 1``; the cumulative kind uses ``L`` for ``N``."""
    if seg.frame is not Frame.SIMPLE:
        raise UnsupportedCombinationError("final-demand impact needs a simple-frame segment")
    _check_length(system, seg)
    kind = _parse_kind(kind)
    if kind == CUMULATIVE:
        N = system.L
    else:
        N = requirements(system, kind, Frame.SIMPLE).values
    dT = N * seg.delta[None, :]
    return ImpactResult(kind, Frame.SIMPLE, _frozen(dT), _frozen(dT.sum(axis=1)))


def gross_output_impact(system: IoSystem, seg: DemandSegment, kind: ImpactKind) -> ImpactResult:
    if seg.frame is not Frame.COMPOSITE:
        raise UnsupportedCombinationError("gross-output impact needs a composite-frame segment")
    _check_length(system, seg)
    kind = _parse_kind(kind)
    if kind == CUMULATIVE:
        raise UnsupportedCombinationError("the cumulative kind exists only in the simple frame")
    N = requirements(system, kind, Frame.COMPOSITE).values
    dT = N * seg.delta[None, :]
    return ImpactResult(kind, Frame.COMPOSITE, _frozen(dT), _frozen(dT.sum(axis=1)))


def impact(system: IoSystem, seg: DemandSegment, kind: ImpactKind) -> ImpactResult:
    if seg.frame is Frame.SIMPLE:
        return final_demand_impact(system, seg, kind)
    return gross_output_impact(system, seg, kind)
