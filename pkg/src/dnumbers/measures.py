"""Belief and plausibility of a D number under a non-exclusivity assignment.

``bel(A)`` sums ``D(B) * (1 - u(B, not A))`` over focal ``B`` contained in
``A``; ``pl(A)`` sums ``u(B, A) * D(B)`` over all focal ``B``.  All sums run in
ascending subset-index order, so the scalar and vector routines below return
bit-identical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .dnumber import DNumber
from .errors import FrameMismatch, FrameTooLargeForDense
from .frame import Frame, is_subset
from .nonexclusivity import MAX_DENSE_SIZE, NonExclusivity

MAX_VERIFY_SIZE = 20

EQ_TOL = 1e-9
INEQ_TOL = 1e-12


class BeliefInterval(NamedTuple):
    lower: float
    upper: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _same_frame(d: DNumber, ne: NonExclusivity) -> Frame:
    if d.frame != ne.frame:
        raise FrameMismatch(
            f"D number and non-exclusivity must share a frame: "
            f"{list(d.frame.labels)} vs {list(ne.frame.labels)}"
        )
    return d.frame


def bel(d: DNumber, ne: NonExclusivity, a: int) -> float:
    frame = _same_frame(d, ne)
    not_a = frame.full ^ frame.check(a)
    acc = 0.0
    for b, mass in d.masses.items():
        if is_subset(b, a):
            acc += mass * (1.0 - ne.degree(b, not_a))
    return acc


def pl(d: DNumber, ne: NonExclusivity, a: int) -> float:
    _same_frame(d, ne).check(a)
    acc = 0.0
    for b, mass in d.masses.items():
        acc += ne.degree(b, a) * mass
    return acc


def belief_interval(d: DNumber, ne: NonExclusivity, a: int) -> BeliefInterval:
    return BeliefInterval(bel(d, ne, a), pl(d, ne, a))


def _vectors(d: DNumber, ne: NonExclusivity) -> tuple[np.ndarray, np.ndarray]:
    frame = _same_frame(d, ne)
    idx = np.arange(frame.n_subsets)
    bel_vec = np.zeros(frame.n_subsets)
    pl_vec = np.zeros(frame.n_subsets)
    for b, mass in d.masses.items():
        row = ne.row(b)
        pl_vec += row * mass
        # complement of index k is full - k, so reversing gives u(b, not A)
        contains_b = (idx & b) == b
        bel_vec += np.where(contains_b, mass * (1.0 - row[::-1]), 0.0)
    return bel_vec, pl_vec


def _dense_guard(frame: Frame, limit: int = MAX_DENSE_SIZE) -> None:
    if frame.size > limit:
        raise FrameTooLargeForDense(
            f"dense Bel/Pl vectors need frame size <= {limit}, got {frame.size}"
        )


def bel_vector(d: DNumber, ne: NonExclusivity) -> np.ndarray:
    _dense_guard(d.frame)
    return _vectors(d, ne)[0]


def pl_vector(d: DNumber, ne: NonExclusivity) -> np.ndarray:
    _dense_guard(d.frame)
    return _vectors(d, ne)[1]


def measure_vectors(
    d: DNumber, ne: NonExclusivity, limit: int = MAX_DENSE_SIZE
) -> tuple[np.ndarray, np.ndarray]:
    """Both vectors at once, sharing the per-focal-set rows of ``u``."""
    _dense_guard(d.frame, limit)
    return _vectors(d, ne)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    statement: str
    tolerance: float
    worst: float
    witness: int

    @property
    def passed(self) -> bool:
        return self.worst <= self.tolerance


@dataclass(frozen=True)
class TheoremReport:
    frame: Frame
    total_mass: float
    checks: tuple[TheoremCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_vectors(bel_vec: np.ndarray, pl_vec: np.ndarray, s: float) -> list[tuple[float, int]]:
    """Worst signed violation and its subset for each of the four laws.

    A value at or below the law's tolerance means the law holds; the
    first subset in canonical order wins ties.
    """
    bel_c = bel_vec[::-1]
    pl_c = pl_vec[::-1]
    gaps = [
        bel_vec - pl_vec,
        bel_vec + bel_c - s,
        s - (pl_vec + pl_c),
        np.abs(bel_vec + pl_c - s),
    ]
    out = []
    for g in gaps:
        k = int(np.argmax(g))
        out.append((float(g[k]), k))
    return out


THEOREMS = (
    ("T1", "Pl(A) >= Bel(A)", INEQ_TOL),
    ("T2", "Bel(A) + Bel(~A) <= s", INEQ_TOL),
    ("T3", "Pl(A) + Pl(~A) >= s", INEQ_TOL),
    ("T4", "Bel(A) + Pl(~A) = s", EQ_TOL),
)


def verify_theorems(d: DNumber, ne: NonExclusivity) -> TheoremReport:
    """Sweep every subset and check the four belief/plausibility laws.

    ``s`` is the total mass of ``d``; for a complete D number it is 1.
    """
    bel_vec, pl_vec = measure_vectors(d, ne, limit=MAX_VERIFY_SIZE)
    results = check_vectors(bel_vec, pl_vec, d.total_mass)
    checks = tuple(
        TheoremCheck(name, statement, tol, worst, witness)
        for (name, statement, tol), (worst, witness) in zip(THEOREMS, results)
    )
    return TheoremReport(d.frame, d.total_mass, checks)
