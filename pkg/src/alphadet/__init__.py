"""Exact computations for the gl_n cyclic modules generated by powers of the
alpha-determinant: transition matrices, multiplicities and their n = 2
closed forms, with an independent route through zonal spherical functions."""

from .exactalg import AlphaPoly, BivarPoly, PolyMatrix, char_poly, critical_alphas, generic_rank, rank_at
from .jacobi import G, hahn_identity_check, heun_residual, unit_circle_roots
from .matalg import D_of, MatPoly, alpha_det, gl_action
from .spherical import gcp, trace_crosscheck
from .symgrp import character, content_poly, kostka, standard_tableau_count
from .tensormod import (conjecture_check, decompose, highest_weight_vectors, multiplicity,
                        sym_sym_decompose, transition_matrix)

__version__ = "0.1.0"

__all__ = [
    "AlphaPoly", "BivarPoly", "PolyMatrix", "char_poly", "critical_alphas", "generic_rank", "rank_at",
    "G", "hahn_identity_check", "heun_residual", "unit_circle_roots",
    "D_of", "MatPoly", "alpha_det", "gl_action",
    "gcp", "trace_crosscheck",
    "character", "content_poly", "kostka", "standard_tableau_count",
    "conjecture_check", "decompose", "highest_weight_vectors", "multiplicity",
    "sym_sym_decompose", "transition_matrix",
]
