"""Finite-field point counting for nilpotent orbits and their flag varieties."""

from .interp import RationalPoly, interpolate
from .linalg import jordan_matrix, jordan_type
from .subspaces import BudgetExceeded, Subspace, enumerate_subspaces, gaussian_binomial
from .varieties import (count_mflags, count_nilpotent_orbit, count_spaltenstein,
                        count_tensor_variety, lemma_sum_witness)

__all__ = [
    "BudgetExceeded", "RationalPoly", "Subspace", "count_mflags", "count_nilpotent_orbit",
    "count_spaltenstein", "count_tensor_variety", "enumerate_subspaces", "gaussian_binomial",
    "interpolate", "jordan_matrix", "jordan_type", "lemma_sum_witness",
]
