"""Translation package initialization"""

from .fl4 import (
    FL4Formula,
    FL4Model,
    check_order_formulas,
    eval_fl4,
    fl4_size,
    fl4_to_sexpr,
    modal_to_fl4,
    order_formula,
)
from .fo2 import (
    Equal,
    Exists,
    FAnd,
    FNot,
    FO2Formula,
    FOChecker,
    Pred,
    Rel,
    Truth,
    eval_fo,
    f_and,
    f_iff,
    f_implies,
    f_not,
    f_or,
    fo_size,
    forall,
    free_variables,
    modal_to_fo,
    parse_sexpr,
    quantifier_depth,
    random_fo2,
    succinctness_formula,
    to_sexpr,
)
from .sigma import fo2_to_modal

__all__ = [
    "FL4Formula",
    "FL4Model",
    "check_order_formulas",
    "eval_fl4",
    "fl4_size",
    "fl4_to_sexpr",
    "modal_to_fl4",
    "order_formula",
    "Equal",
    "Exists",
    "FAnd",
    "FNot",
    "FO2Formula",
    "FOChecker",
    "Pred",
    "Rel",
    "Truth",
    "eval_fo",
    "f_and",
    "f_iff",
    "f_implies",
    "f_not",
    "f_or",
    "fo_size",
    "forall",
    "free_variables",
    "modal_to_fo",
    "parse_sexpr",
    "quantifier_depth",
    "random_fo2",
    "succinctness_formula",
    "to_sexpr",
    "fo2_to_modal",
]
