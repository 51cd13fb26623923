"""Belief and plausibility measures for D numbers.

D numbers generalize Dempster-Shafer mass functions: the frame's elements need
not be mutually exclusive and the masses may sum to less than one.
"""

from .classic import MassFunction, bel_classic, belief_interval_classic, make_bpa, pl_classic
from .dnumber import Completeness, DNumber, Kind, as_bpa, completeness, d_vector, make_dnumber
from .frame import Frame, complement, encode_subset, enumerate_subsets, make_frame
from .measures import (
    BeliefInterval,
    TheoremReport,
    bel,
    bel_vector,
    belief_interval,
    pl,
    pl_vector,
    verify_theorems,
)
from .nonexclusivity import (
    NonExclusivity,
    Strategy,
    make_element_derived,
    make_exclusive,
    make_explicit_table,
    make_uniform,
    matrix,
)

__all__ = [
    "BeliefInterval", "Completeness", "DNumber", "Frame", "Kind", "MassFunction",
    "NonExclusivity", "Strategy", "TheoremReport", "as_bpa", "bel", "bel_classic",
    "bel_vector", "belief_interval", "belief_interval_classic", "complement",
    "completeness", "d_vector", "encode_subset", "enumerate_subsets", "make_bpa",
    "make_dnumber", "make_element_derived", "make_exclusive", "make_explicit_table",
    "make_frame", "make_uniform", "matrix", "pl", "pl_classic", "pl_vector",
    "verify_theorems",
]
