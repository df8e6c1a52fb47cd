"""Kirillov-Reshetikhin module decompositions, Q-systems and growth of dimensions."""

from .characters import Character, InexactDivision, divide_exact, is_true_character, tensor_irreducibles
from .growth import GrowthResult, max_growth
from .kr_formula import OracleResult, admissible_configs, kr_character, kr_multiplicity, kr_query
from .lie import AlgebraSpec, InvalidAlgebra, cartan_data, fundamental_weight, weyl_dim
from .qsystem import QTable, check_relations, kr_initial_data, negative_witness
from .rectangles import Rectangle, kostka, rect_decompose
from .tree import DecompositionTree, NotSimplyLaced, aggregate, build_tree

__all__ = [
    "AlgebraSpec",
    "Character",
    "DecompositionTree",
    "GrowthResult",
    "InexactDivision",
    "InvalidAlgebra",
    "NotSimplyLaced",
    "OracleResult",
    "QTable",
    "Rectangle",
    "admissible_configs",
    "aggregate",
    "build_tree",
    "cartan_data",
    "check_relations",
    "divide_exact",
    "fundamental_weight",
    "is_true_character",
    "kostka",
    "kr_character",
    "kr_initial_data",
    "kr_multiplicity",
    "kr_query",
    "max_growth",
    "negative_witness",
    "rect_decompose",
    "tensor_irreducibles",
    "weyl_dim",
]
