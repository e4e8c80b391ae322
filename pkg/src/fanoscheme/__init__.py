"""Numerical invariants of Fano schemes of linear subspaces on complete intersections."""

from .invariants import (
    ConsistencyError,
    FanoError,
    FanoProblem,
    InvalidProblemError,
    InvariantsReport,
    canonical_factor,
    compositions,
    compute_report,
    degree_theorem2,
    expected_dimension,
    genus_theorem1,
    hypothesis_check,
    sym_power_c1_factor,
    sym_power_rank,
    symmetric_power_forms,
)
from .oracle import SparsePoly, degree_dm, naive_coefficient
from .polyring import (
    LinearForm,
    RingMismatchError,
    TruncPoly,
    coefficient,
    tp_mul,
    tp_mul_linear,
    tp_one,
    tp_pow,
)

__version__ = "0.1.0"
