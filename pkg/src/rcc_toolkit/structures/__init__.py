"""Region structure package initialization"""

from .enumerate import enumerate_structures, naive_structures
from .region_structure import (
    RegionStructure,
    SupReport,
    Valuation,
    Violation,
    check_sup_property,
    induced,
    model_from_dict,
    model_to_dict,
    powerset_rcc5,
    substructure,
    validate,
)

__all__ = [
    "enumerate_structures",
    "naive_structures",
    "RegionStructure",
    "SupReport",
    "Valuation",
    "Violation",
    "check_sup_property",
    "induced",
    "model_from_dict",
    "model_to_dict",
    "powerset_rcc5",
    "substructure",
    "validate",
]
