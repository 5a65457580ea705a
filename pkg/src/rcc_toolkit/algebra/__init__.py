"""Relation algebra package initialization"""

from .relations import (
    BaseRelation,
    BaseRelation5,
    BaseRelation8,
    Kind,
    RelationSet,
    coarsen,
    converse,
    parse_relation,
    refine,
)
from .tables import (
    RCC5_TABLE,
    RCC5_TABLE_AS_PRINTED,
    RCC8_TABLE,
    CompositionTable,
    TableReport,
    compose,
    compose5,
    compose_sets,
    table_for,
    table_meta_check,
)

__all__ = [
    "BaseRelation",
    "BaseRelation5",
    "BaseRelation8",
    "Kind",
    "RelationSet",
    "coarsen",
    "converse",
    "parse_relation",
    "refine",
    "RCC5_TABLE",
    "RCC5_TABLE_AS_PRINTED",
    "RCC8_TABLE",
    "CompositionTable",
    "TableReport",
    "compose",
    "compose5",
    "compose_sets",
    "table_for",
    "table_meta_check",
]
