"""D numbers: mass assignments whose total may fall short of one."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, NamedTuple

import numpy as np

from ._masses import SUM_TOL, canonical_masses, ordered_sum
from .classic import MassFunction
from .errors import FrameTooLargeForDense, NotComplete, SumExceedsOne
from .frame import Frame

#: 2**24 float64 entries is 128 MiB; beyond the frame cap anyway.
MAX_VECTOR_SIZE = 24


@dataclass(frozen=True, eq=False)
class DNumber:
    frame: Frame
    masses: Mapping[int, float]
    total_mass: float

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DNumber):
            return NotImplemented
        return self.frame == other.frame and dict(self.masses) == dict(other.masses)

    def __hash__(self) -> int:
        return hash((self.frame, tuple(self.masses.items())))

    def __getitem__(self, subset: int) -> float:
        return self.masses.get(self.frame.check(subset), 0.0)


class Kind(enum.Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"


class Completeness(NamedTuple):
    kind: Kind
    deficit: float


def make_dnumber(frame: Frame, assignments: Mapping[int, float]) -> DNumber:
    masses = canonical_masses(frame, assignments)
    total = ordered_sum(masses)
    if total > 1.0 + SUM_TOL:
        raise SumExceedsOne(f"D number masses must sum to at most 1, got {total!r}")
    return DNumber(frame, MappingProxyType(masses), total)


def completeness(d: DNumber) -> Completeness:
    deficit = 1.0 - d.total_mass
    kind = Kind.COMPLETE if abs(deficit) <= SUM_TOL else Kind.INCOMPLETE
    return Completeness(kind, deficit)


def is_complete(d: DNumber) -> bool:
    return completeness(d).kind is Kind.COMPLETE


def as_bpa(d: DNumber) -> MassFunction:
    """View a complete D number as a classical BPA with identical masses."""
    if d.total_mass < 1.0 - SUM_TOL:
        raise NotComplete(
            f"only information-complete D numbers convert to a BPA; total mass is {d.total_mass!r}"
        )
    return MassFunction(d.frame, MappingProxyType(dict(d.masses)))


def from_bpa(m: MassFunction) -> DNumber:
    return DNumber(m.frame, MappingProxyType(dict(m.masses)), ordered_sum(m.masses))


def d_vector(d: DNumber) -> np.ndarray:
    if d.frame.size > MAX_VECTOR_SIZE:
        raise FrameTooLargeForDense(
            f"dense D vector needs frame size <= {MAX_VECTOR_SIZE}, got {d.frame.size}"
        )
    vec = np.zeros(d.frame.n_subsets)
    for subset, mass in d.masses.items():
        vec[subset] = mass
    return vec
