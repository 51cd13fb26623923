"""Brute-force reference forms of the measures, plus a seeded instance generator.

The references loop over the whole powerset and use the alternate written
forms: belief over every ``B`` of the frame rather than only ``B`` inside
``A``, plausibility split into intersecting and disjoint branches.  They share
nothing with :mod:`dnumbers.measures` beyond the ``u`` evaluation.
"""

from __future__ import annotations

import numpy as np

from .dnumber import DNumber, make_dnumber
from .errors import FrameTooLargeForOracle
from .frame import Frame, make_frame
from .nonexclusivity import (
    NonExclusivity,
    Strategy,
    make_element_derived,
    make_exclusive,
    make_explicit_table,
)

MAX_ORACLE_SIZE = 16
MAX_RANDOM_SIZE = 8
MAX_FOCAL = 16


def _guard(frame: Frame) -> None:
    if frame.size > MAX_ORACLE_SIZE:
        raise FrameTooLargeForOracle(
            f"exhaustive oracle needs frame size <= {MAX_ORACLE_SIZE}, got {frame.size}"
        )


def _dense_masses(d: DNumber) -> np.ndarray:
    dense = np.zeros(d.frame.n_subsets)
    for b, mass in d.masses.items():
        dense[b] = mass
    return dense


def _degree_column(ne: NonExclusivity, target: int, n_subsets: int) -> np.ndarray:
    """``u(B, target)`` for every ``B``: 1 where ``B`` meets ``target``, else looked up."""
    col = ((np.arange(n_subsets) & target) != 0).astype(float)
    rest = (n_subsets - 1) ^ target
    b = rest
    while b:
        col[b] = ne.degree(b, target)
        b = (b - 1) & rest
    col[0] = ne.degree(0, target)
    return col


def bel_oracle(d: DNumber, ne: NonExclusivity, a: int) -> float:
    _guard(d.frame)
    return _bel_all(_dense_masses(d), ne, d.frame.check(a))


def pl_oracle(d: DNumber, ne: NonExclusivity, a: int) -> float:
    _guard(d.frame)
    return _pl_all(_dense_masses(d), ne, d.frame.check(a))


def _bel_all(dense: np.ndarray, ne: NonExclusivity, a: int) -> float:
    n = len(dense)
    col = _degree_column(ne, n - 1 - a, n)
    return float(np.sum(dense * (1.0 - col)))


def _pl_all(dense: np.ndarray, ne: NonExclusivity, a: int) -> float:
    n = len(dense)
    col = _degree_column(ne, a, n)
    meets = col == 1.0
    meets &= (np.arange(n) & a) != 0
    return float(np.sum(dense[meets]) + np.sum(col[~meets] * dense[~meets]))


def oracle_vectors(d: DNumber, ne: NonExclusivity) -> tuple[np.ndarray, np.ndarray]:
    """Reference Bel and Pl for every subset, canonical order."""
    _guard(d.frame)
    dense = _dense_masses(d)
    subsets = range(len(dense))
    return (
        np.array([_bel_all(dense, ne, a) for a in subsets]),
        np.array([_pl_all(dense, ne, a) for a in subsets]),
    )


def random_instance(
    seed: int, frame_size: int, strategy: Strategy | str, complete: bool
) -> tuple[DNumber, NonExclusivity]:
    """Deterministic random D number and non-exclusivity on ``frame_size`` labels."""
    if not 1 <= frame_size <= MAX_RANDOM_SIZE:
        raise ValueError(f"frame_size must be in [1, {MAX_RANDOM_SIZE}], got {frame_size}")
    strategy = Strategy(strategy)
    rng = np.random.default_rng([seed, frame_size, list(Strategy).index(strategy), int(complete)])
    frame = make_frame(f"q{i + 1}" for i in range(frame_size))
    full = frame.full

    k = int(rng.integers(1, min(full, MAX_FOCAL) + 1))
    focal = rng.choice(np.arange(1, full + 1), size=k, replace=False)
    weights = rng.uniform(0.05, 1.0, size=k)
    target = 1.0 if complete else float(rng.uniform(0.01, 0.99))
    scaled = weights / weights.sum() * target
    d = make_dnumber(frame, {int(b): float(w) for b, w in zip(focal, scaled)})

    if strategy is Strategy.EXCLUSIVE:
        ne = make_exclusive(frame)
    elif strategy is Strategy.ELEMENT_DERIVED:
        pairs = {}
        for i in range(frame_size):
            for j in range(i + 1, frame_size):
                if rng.random() < 0.5:
                    pairs[(frame.labels[i], frame.labels[j])] = float(rng.random())
        ne = make_element_derived(frame, pairs)
    else:
        disjoint = []
        for bi in range(1, full + 1):
            rest = full ^ bi
            bj = rest
            while bj > bi:
                disjoint.append((bi, bj))
                bj = (bj - 1) & rest
        keep = rng.random(len(disjoint)) < 0.5
        values = rng.random(len(disjoint))
        ne = make_explicit_table(
            frame, {pair: float(p) for pair, p, k in zip(disjoint, values, keep) if k}
        )
    return d, ne
