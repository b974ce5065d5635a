"""Exact cell structures on transformation-monoid algebras and generalized Schur algebras."""

from .cells import (
    AxiomReport,
    CellStructure,
    GramReport,
    action_matrix,
    gram_matrix,
    irreducible_dims,
    lambda_zero,
    quasi_hereditary_sufficient,
    r_st,
    verify_cell_axioms,
)
from .combinatorics import Composition, Partition
from .linalg import GF, QQ, ZZ, RingSpec
from .monoid import MonoidSpec, SubsetOrdering
from .monoid_cells import MonoidCells, SymmetricGroupCells, monoid_cell_structure
from .schur import SchurAlgebra, SchurCells, schur_cell_structure
from .theory import count_irreducible_data, lambda_Lp_set, lambda_p_set, predicted_lambda0, witness_bracket

__version__ = "0.1.0"
