"""Generalized Casimir invariant counts and Lie algebra contractions over Q."""

from .scalar_poly import MultiPoly, RationalFunction, UPoly, ratfunc_limit_at_zero, ratfunc_matrix_inverse
from .lie_core import LieAlgebra, BasisChange, bracket, jacobi_check, change_basis, center
from .invariants import (
    build_commutator_matrix,
    generic_rank,
    invariant_count,
    polynomial_invariants,
    functional_independence_check,
)
from .contraction import (
    ContractionFamily,
    DivergentLimit,
    apply_family,
    contract_limit,
    semicontinuity_check,
    verify_monotonicity,
    contraction_necessary_condition,
    Verdict,
)

__version__ = "0.1.0"
