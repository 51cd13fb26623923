"""Classical Dempster-Shafer basic probability assignments."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, NamedTuple

from ._masses import SUM_TOL, canonical_masses, ordered_sum
from .errors import SumNotOne
from .frame import Frame, is_subset


@dataclass(frozen=True, eq=False)
class MassFunction:
    frame: Frame
    masses: Mapping[int, float]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and dict(self.masses) == dict(other.masses)

    def __hash__(self) -> int:
        return hash((self.frame, tuple(self.masses.items())))


class Interval(NamedTuple):
    lower: float
    upper: float


def make_bpa(frame: Frame, assignments: Mapping[int, float]) -> MassFunction:
    masses = canonical_masses(frame, assignments)
    total = ordered_sum(masses)
    if abs(total - 1.0) > SUM_TOL:
        raise SumNotOne(f"BPA masses must sum to 1 within {SUM_TOL:g}, got {total!r}")
    return MassFunction(frame, MappingProxyType(masses))


def bel_classic(m: MassFunction, subset: int) -> float:
    m.frame.check(subset)
    acc = 0.0
    for b, mass in m.masses.items():
        if is_subset(b, subset):
            acc += mass
    return acc


def pl_classic(m: MassFunction, subset: int) -> float:
    m.frame.check(subset)
    acc = 0.0
    for b, mass in m.masses.items():
        if b & subset:
            acc += mass
    return acc


def belief_interval_classic(m: MassFunction, subset: int) -> Interval:
    return Interval(bel_classic(m, subset), pl_classic(m, subset))
