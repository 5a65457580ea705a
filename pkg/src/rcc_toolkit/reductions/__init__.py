"""Reductions package initialization"""

from .corpus import (
    corpus_names,
    disconnected_parts_formula,
    ec4_hull_network,
    ec_k,
    harbor_formulas,
    harbor_model,
    loeb_formula,
    proper_part_exists,
    three_disconnected_formula,
)
from .domino import DominoSystem, Tiling, brute_force_triangle, find_triangle, tile_square, tile_triangle
from .grid import (
    dovetail_label,
    lambda_,
    lambda_inv,
    left_of,
    on_floor,
    on_wall,
    right_of,
    square_positions,
    triangle_positions,
    triangle_size,
    up_of,
)
from .phi import VOCABULARY, chi_d, chi_d_fin, phi_d, phi_d_fin, phi_d_recurring, recurring_groups
from .s53 import (
    RESERVED,
    S53Model,
    chi_groups,
    chi_rcc5,
    model_from_s53,
    random_s53_formula,
    s53_check,
    s53_reduction,
    sharp_translate,
    triple_region,
)
from .turing import TuringMachine, active_tile, tm_to_domino, trace_tile
from .witness import check_domino_ready, domready_witness, model_from_tiling

__all__ = [
    "corpus_names",
    "disconnected_parts_formula",
    "ec4_hull_network",
    "ec_k",
    "harbor_formulas",
    "harbor_model",
    "loeb_formula",
    "proper_part_exists",
    "three_disconnected_formula",
    "DominoSystem",
    "Tiling",
    "brute_force_triangle",
    "find_triangle",
    "tile_square",
    "tile_triangle",
    "dovetail_label",
    "lambda_",
    "lambda_inv",
    "left_of",
    "on_floor",
    "on_wall",
    "right_of",
    "square_positions",
    "triangle_positions",
    "triangle_size",
    "up_of",
    "VOCABULARY",
    "chi_d",
    "chi_d_fin",
    "phi_d",
    "phi_d_fin",
    "phi_d_recurring",
    "recurring_groups",
    "RESERVED",
    "S53Model",
    "chi_groups",
    "chi_rcc5",
    "model_from_s53",
    "random_s53_formula",
    "s53_check",
    "s53_reduction",
    "sharp_translate",
    "triple_region",
    "TuringMachine",
    "active_tile",
    "tm_to_domino",
    "trace_tile",
    "check_domino_ready",
    "domready_witness",
    "model_from_tiling",
]
