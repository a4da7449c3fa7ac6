"""gl_N crystals, Littlewood-Richardson multiplicities and finite-field point counts."""

from .crystal import (Crystal, canonical_signature, character, decompose, direct_sum,
                      highest_elements, raise_to_highest, tensor, trivial_crystal)
from .decomp import decompose_product, lr_coefficient, tau_n
from .gl2 import Gl2Elem, S2Label, gl2_crystal, s2_dim, s2_nonempty, tau2
from .schur import decompose_into_schur, dim_of, schur
from .tableaux import Tableau, crystal_of, highest_tableau

__all__ = [
    "Crystal", "Gl2Elem", "S2Label", "Tableau", "canonical_signature", "character",
    "crystal_of", "decompose", "decompose_into_schur", "decompose_product", "dim_of",
    "direct_sum", "gl2_crystal", "highest_elements", "highest_tableau", "lr_coefficient",
    "raise_to_highest", "s2_dim", "s2_nonempty", "schur", "tau2", "tau_n", "tensor",
    "trivial_crystal",
]
