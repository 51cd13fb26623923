from __future__ import annotations

import math
from typing import Mapping

from .errors import EmptySetMass, MassOutOfRange
from .frame import Frame

SUM_TOL = 1e-9


def canonical_masses(frame: Frame, assignments: Mapping[int, float]) -> dict[int, float]:
    """Validate per-entry constraints and return masses sorted by subset index.

    Zero entries are dropped; duplicate keys cannot occur in a mapping.
    """
    out: dict[int, float] = {}
    for subset in sorted(assignments):
        frame.check(subset)
        value = assignments[subset]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MassOutOfRange(f"mass of {frame.format_subset(subset)} must be a number, got {value!r}")
        value = float(value)
        if math.isnan(value) or not 0.0 <= value <= 1.0:
            raise MassOutOfRange(
                f"mass of {frame.format_subset(subset)} must lie in [0, 1], got {value!r}"
            )
        if subset == 0:
            if value > 0.0:
                raise EmptySetMass(f"the empty set must carry zero mass, got {value!r}")
            continue
        if value > 0.0:
            out[subset] = value
    return out


def ordered_sum(masses: Mapping[int, float]) -> float:
    total = 0.0
    for subset in sorted(masses):
        total += masses[subset]
    return total
