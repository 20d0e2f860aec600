"""Exact verification of post-Lie algebra structures and NIL-affine embeddings."""

from .poly import Context, MultiPoly, parse_poly, standard_context
from .matrix import PolyMatrix, char_poly, determinant, is_nilpotent, jordan_chevalley
from .lie import LieAlgebra, ad_matrix, bracket, check_jacobi
from .affine import Embedding, check_morphism, induce_bracket, t_bijective
from .structures import (PlasStructure, complete_2step, completeness_report, induce_plas,
                         left_mult, right_mult, verify_plas)

__version__ = "0.1.0"
