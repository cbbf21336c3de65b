"""Exact Fock-space computations for algebras given by an a_i a†_j rewrite rule."""

__version__ = "0.1.0"

from .algebra import (Affine, AlgebraSpec, FockState, GuardExceeded, LevelFn, Product, Step,
                      annihilate, apply_creation, inner_product, state_inner, transition_apply)
from .gram import (RegularDecomposition, SymmetryViolation, gram_generic, gram_matrix,
                   left_invariance_check, multiset_orthogonality_check, regular_decompose)
from .linalg import PsdVerdict, RationalMatrix, null_basis, psd_check, rank
from .presets import PresetId, build
from .statistics import (HaldaneRecord, available_dim, d_lambda, dimension_table, fock_dimension,
                         haldane_g, null_states, partitions)
from .expansion import (NormalOrderedOperator, apply_operator, instantiate_expansion,
                        verify_expansion, verify_transition, verify_triple_relation)
