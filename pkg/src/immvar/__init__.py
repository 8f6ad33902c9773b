"""Exact computations for immanant varieties: symmetry classes of tensors, immanants,
the posets B_chi(k,n), chi-matroids and incidence strata."""

from .bposet import BPoset, Poset, build, polya_rank_generating, rank_generating, witt_count
from .character import Character, char_from_generator_exponents, sign_character, table_character, trivial_character
from .exactalg import CycloNum, MVPoly
from .permgrp import Perm, PermGroup, act, closure, symmetric_group, young_subgroup
from .symtensor import SymTensor, apply_idempotent, coords_in_basis, dim_formula, rank_of_image

__version__ = "0.1.0"

__all__ = [
    "BPoset",
    "Poset",
    "build",
    "polya_rank_generating",
    "rank_generating",
    "witt_count",
    "Character",
    "char_from_generator_exponents",
    "sign_character",
    "table_character",
    "trivial_character",
    "CycloNum",
    "MVPoly",
    "Perm",
    "PermGroup",
    "act",
    "closure",
    "symmetric_group",
    "young_subgroup",
    "SymTensor",
    "apply_idempotent",
    "coords_in_basis",
    "dim_formula",
    "rank_of_image",
]
