"""Non-exclusive degrees between subsets and the matrix they form.

Three constructions are supported:

* ``EXCLUSIVE``: disjoint subsets have degree 0, the classical limit.
* ``ELEMENT_DERIVED``: degrees are given between single elements; a subset
  pair takes the largest degree over its cross element pairs.
* ``EXPLICIT_TABLE``: degrees are given directly for disjoint subset pairs.

Whatever the construction, intersecting subsets have degree 1 and any pair
involving the empty set has degree 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import (
    ConflictingSymmetricEntries,
    FrameTooLargeForDense,
    PairNotDisjoint,
    ValueOutOfRange,
)
from .frame import Frame, element_bits

MAX_DENSE_SIZE = 10


class Strategy(enum.Enum):
    EXCLUSIVE = "exclusive"
    ELEMENT_DERIVED = "element_derived"
    EXPLICIT_TABLE = "explicit_table"


def _check_degree(value: object, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueOutOfRange(f"non-exclusive degree of {what} must be a number, got {value!r}")
    value = float(value)
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise ValueOutOfRange(f"non-exclusive degree of {what} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True, eq=False)
class NonExclusivity:
    frame: Frame
    strategy: Strategy
    # ELEMENT_DERIVED: N x N symmetric, diagonal 1.
    element_matrix: np.ndarray | None = None
    # EXPLICIT_TABLE: both orientations stored.
    table: Mapping[tuple[int, int], float] = field(default_factory=lambda: MappingProxyType({}))
    _rows: Mapping[int, Mapping[int, float]] = field(
        init=False, repr=False, default_factory=lambda: MappingProxyType({})
    )
    _pairs: tuple[tuple[float, ...], ...] = field(init=False, repr=False, default=())

    def __post_init__(self) -> None:
        rows: dict[int, dict[int, float]] = {}
        for (bi, bj), p in self.table.items():
            rows.setdefault(bi, {})[bj] = p
        object.__setattr__(self, "_rows", rows)
        if self.element_matrix is not None:
            object.__setattr__(self, "_pairs", tuple(map(tuple, self.element_matrix.tolist())))

    def u(self, bi: int, bj: int) -> float:
        self.frame.check(bi)
        self.frame.check(bj)
        return self.degree(bi, bj)

    def degree(self, bi: int, bj: int) -> float:
        """``u`` without index validation, for inner loops."""
        if bi & bj:
            return 1.0
        if not bi or not bj:
            return 0.0
        if self.strategy is Strategy.EXCLUSIVE:
            return 0.0
        if self.strategy is Strategy.EXPLICIT_TABLE:
            return self.table.get((bi, bj), 0.0)
        best = 0.0
        cols = element_bits(bj)
        for x in element_bits(bi):
            row = self._pairs[x]
            for y in cols:
                if row[y] > best:
                    best = row[y]
        return best

    def row(self, bi: int) -> np.ndarray:
        """``u(bi, C)`` for every subset ``C`` in canonical order."""
        frame = self.frame
        frame.check(bi)
        n = frame.size
        size = frame.n_subsets
        if not bi:
            return np.zeros(size)
        if self.strategy is Strategy.ELEMENT_DERIVED:
            # degree of bi against each single element, then max over subsets
            # built up one bit at a time
            per_element = self.element_matrix[list(element_bits(bi))].max(axis=0)
            out = np.zeros(size)
            for j in range(n):
                view = out.reshape(-1, 2, 1 << j)
                np.maximum(view[:, 0, :], per_element[j], out=view[:, 1, :])
            return out
        out = ((np.arange(size) & bi) != 0).astype(float)
        if self.strategy is Strategy.EXPLICIT_TABLE:
            for bj, p in self._rows.get(bi, {}).items():
                out[bj] = p
        return out


def make_exclusive(frame: Frame) -> NonExclusivity:
    return NonExclusivity(frame, Strategy.EXCLUSIVE)


def make_element_derived(
    frame: Frame, pairs: Mapping[tuple[str, str], float]
) -> NonExclusivity:
    n = frame.size
    em = np.zeros((n, n))
    given: dict[tuple[int, int], float] = {}
    for (x, y), value in pairs.items():
        i, j = frame.position(x), frame.position(y)
        p = _check_degree(value, f"({x}, {y})")
        if i == j:
            if p != 1.0:
                raise ValueOutOfRange(
                    f"an element is fully non-exclusive with itself; ({x}, {x}) must be 1, got {p!r}"
                )
            continue
        key = (min(i, j), max(i, j))
        if key in given and given[key] != p:
            raise ConflictingSymmetricEntries(
                f"degree must be symmetric: ({x}, {y}) given as {given[key]!r} and {p!r}"
            )
        given[key] = p
        em[i, j] = em[j, i] = p
    np.fill_diagonal(em, 1.0)
    em.setflags(write=False)
    return NonExclusivity(frame, Strategy.ELEMENT_DERIVED, element_matrix=em)


def make_explicit_table(
    frame: Frame, entries: Mapping[tuple[int, int], float]
) -> NonExclusivity:
    table: dict[tuple[int, int], float] = {}
    for (bi, bj), value in entries.items():
        frame.check(bi)
        frame.check(bj)
        what = f"({frame.format_subset(bi)}, {frame.format_subset(bj)})"
        if not bi or not bj:
            raise PairNotDisjoint(
                f"table entries need two nonempty subsets; {what} involves the empty set"
            )
        if bi & bj:
            raise PairNotDisjoint(
                f"intersecting subsets always have degree 1; {what} cannot be overridden"
            )
        p = _check_degree(value, what)
        if (bi, bj) in table and table[(bi, bj)] != p:
            raise ConflictingSymmetricEntries(
                f"degree must be symmetric: {what} given as {table[(bi, bj)]!r} and {p!r}"
            )
        table[(bi, bj)] = table[(bj, bi)] = p
    return NonExclusivity(frame, Strategy.EXPLICIT_TABLE, table=MappingProxyType(table))


def make_uniform(frame: Frame, p: float) -> NonExclusivity:
    """Every disjoint nonempty pair gets the same degree ``p``."""
    p = _check_degree(p, "every disjoint pair")
    if frame.size > MAX_DENSE_SIZE:
        raise FrameTooLargeForDense(
            f"a uniform table needs frame size <= {MAX_DENSE_SIZE}, got {frame.size}"
        )
    full = frame.full
    entries = {}
    for bi in range(1, full + 1):
        rest = full ^ bi
        bj = rest
        while bj:
            entries[(bi, bj)] = p
            bj = (bj - 1) & rest
    return make_explicit_table(frame, entries)


def matrix(ne: NonExclusivity) -> np.ndarray:
    if ne.frame.size > MAX_DENSE_SIZE:
        raise FrameTooLargeForDense(
            f"dense U matrix needs frame size <= {MAX_DENSE_SIZE}, got {ne.frame.size}"
        )
    return np.vstack([ne.row(bi) for bi in range(ne.frame.n_subsets)])
