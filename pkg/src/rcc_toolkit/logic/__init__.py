"""Modal logic package initialization"""

from .axioms import (
    SCHEMAS,
    SoundnessReport,
    axiom_instances,
    random_instance,
    rule_cov_check,
    schema_relations,
    soundness_check,
)
from .encode import network_to_formula, nominal_valuation, variable_for
from .formula import (
    BOTTOM,
    TOP,
    And,
    Bottom,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Mode,
    Nom,
    Not,
    Or,
    Top,
    Var,
    anti_homogeneous,
    big_and,
    big_or,
    box_u,
    depth,
    diamond_u,
    homogeneous,
    random_formula,
    size,
    variables,
)
from .parser import format_formula, parse
from .search import Witness, bounded_sat, candidate_count, naive_sat
from .semantics import ModelChecker, check, expand, extension, sat_in, valid_in

__all__ = [
    "SCHEMAS",
    "SoundnessReport",
    "axiom_instances",
    "random_instance",
    "rule_cov_check",
    "schema_relations",
    "soundness_check",
    "network_to_formula",
    "nominal_valuation",
    "variable_for",
    "BOTTOM",
    "TOP",
    "And",
    "Bottom",
    "Box",
    "Diamond",
    "Formula",
    "Iff",
    "Implies",
    "Mode",
    "Nom",
    "Not",
    "Or",
    "Top",
    "Var",
    "anti_homogeneous",
    "big_and",
    "big_or",
    "box_u",
    "depth",
    "diamond_u",
    "homogeneous",
    "random_formula",
    "size",
    "variables",
    "format_formula",
    "parse",
    "Witness",
    "bounded_sat",
    "candidate_count",
    "naive_sat",
    "ModelChecker",
    "check",
    "expand",
    "extension",
    "sat_in",
    "valid_in",
]
