"""
Composition tables for RCC8 and RCC5

The tables store only entries between non-identity relations; eq is the
identity element and is answered algebraically.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from ..errors import KindMismatchError
from .relations import (
    BaseRelation,
    BaseRelation5,
    BaseRelation8,
    Kind,
    RelationSet,
    parse_relation,
)

LOGGER = logging.getLogger(__name__)

_ALL8 = "dc ec po eq tpp ntpp tppi ntppi"
_ALL5 = "dr po eq pp ppi"

# Row r1, column r2: relations possible between x and z given x r1 y, y r2 z.
RCC8_TABLE: Dict[Tuple[str, str], str] = {
    ("dc", "dc"): _ALL8,
    ("dc", "ec"): "dc ec po tpp ntpp",
    ("dc", "tpp"): "dc ec po tpp ntpp",
    ("dc", "tppi"): "dc",
    ("dc", "po"): "dc ec po tpp ntpp",
    ("dc", "ntpp"): "dc ec po tpp ntpp",
    ("dc", "ntppi"): "dc",

    ("ec", "dc"): "dc ec po tppi ntppi",
    ("ec", "ec"): "dc ec po tpp tppi eq",
    ("ec", "tpp"): "ec po tpp ntpp",
    ("ec", "tppi"): "dc ec",
    ("ec", "po"): "dc ec po tpp ntpp",
    ("ec", "ntpp"): "po tpp ntpp",
    ("ec", "ntppi"): "dc",

    ("tpp", "dc"): "dc",
    ("tpp", "ec"): "dc ec",
    ("tpp", "tpp"): "tpp ntpp",
    ("tpp", "tppi"): "dc ec po tpp tppi eq",
    ("tpp", "po"): "dc ec po tpp ntpp",
    ("tpp", "ntpp"): "ntpp",
    ("tpp", "ntppi"): "dc ec po tppi ntppi",

    ("tppi", "dc"): "dc ec po tppi ntppi",
    ("tppi", "ec"): "ec po tppi ntppi",
    ("tppi", "tpp"): "po eq tpp tppi",
    ("tppi", "tppi"): "tppi ntppi",
    ("tppi", "po"): "po tppi ntppi",
    ("tppi", "ntpp"): "po tpp ntpp",
    ("tppi", "ntppi"): "ntppi",

    ("po", "dc"): "dc ec po tppi ntppi",
    ("po", "ec"): "dc ec po tppi ntppi",
    ("po", "tpp"): "po tpp ntpp",
    ("po", "tppi"): "dc ec po tppi ntppi",
    ("po", "po"): _ALL8,
    ("po", "ntpp"): "po tpp ntpp",
    ("po", "ntppi"): "dc ec po tppi ntppi",

    ("ntpp", "dc"): "dc",
    ("ntpp", "ec"): "dc",
    ("ntpp", "tpp"): "ntpp",
    ("ntpp", "tppi"): "dc ec po tpp ntpp",
    ("ntpp", "po"): "dc ec po tpp ntpp",
    ("ntpp", "ntpp"): "ntpp",
    ("ntpp", "ntppi"): _ALL8,

    ("ntppi", "dc"): "dc ec po tppi ntppi",
    ("ntppi", "ec"): "po tppi ntppi",
    ("ntppi", "tpp"): "po tppi ntppi",
    ("ntppi", "tppi"): "ntppi",
    ("ntppi", "po"): "po tppi ntppi",
    ("ntppi", "ntpp"): "po tppi tpp ntpp ntppi eq",
    ("ntppi", "ntppi"): "ntppi",
}

RCC5_TABLE: Dict[Tuple[str, str], str] = {
    ("dr", "dr"): _ALL5,
    ("dr", "po"): "dr po pp",
    ("dr", "pp"): "dr po pp",
    ("dr", "ppi"): "dr",

    ("po", "dr"): "dr po ppi",
    ("po", "po"): _ALL5,
    ("po", "pp"): "po pp",
    ("po", "ppi"): "dr po ppi",

    ("pp", "dr"): "dr",
    ("pp", "po"): "dr po pp",
    ("pp", "pp"): "pp",
    ("pp", "ppi"): _ALL5,

    ("ppi", "dr"): "dr po ppi",
    ("ppi", "po"): "po ppi",
    ("ppi", "pp"): "eq po pp ppi",
    ("ppi", "ppi"): "ppi",
}

# Variant of the RCC5 table with the misprinted entry ppi∘po = {po, pp}.
# Kept as an audit fixture: table_meta_check flags it.
RCC5_TABLE_AS_PRINTED: Dict[Tuple[str, str], str] = dict(RCC5_TABLE)
RCC5_TABLE_AS_PRINTED[("ppi", "po")] = "po pp"


def _compile(raw: Mapping[Tuple[str, str], str], kind: Kind) -> Dict[Tuple[BaseRelation, BaseRelation], RelationSet]:
    table = {}
    for (a, b), entry in raw.items():
        r1 = parse_relation(a, kind)
        r2 = parse_relation(b, kind)
        table[(r1, r2)] = RelationSet.from_names(entry.split(), kind)
    return table


class CompositionTable:
    """
    Table-driven composition for one relation kind

    Args:
        kind: RCC8 or RCC5
        raw: Mapping (row name, column name) -> space separated entry; the
            embedded data of the kind is used when omitted
    """

    def __init__(self, kind: Kind = Kind.RCC8, raw: Optional[Mapping[Tuple[str, str], str]] = None):
        self.kind = Kind.parse(kind)
        if raw is None:
            raw = RCC8_TABLE if self.kind is Kind.RCC8 else RCC5_TABLE
        self.raw = dict(raw)
        self._table = _compile(self.raw, self.kind)
        size = len(self.kind.relations)
        # Composition of single relations by index, as bitmasks.
        self._masks = [[0] * size for _ in range(size)]
        for r1 in self.kind.relations:
            for r2 in self.kind.relations:
                self._masks[r1.index][r2.index] = self.compose(r1, r2).mask

    @property
    def stored_entries(self) -> int:
        return len(self._table)

    def compose(self, r1: BaseRelation, r2: BaseRelation) -> RelationSet:
        """Composition of two base relations; eq is the identity"""
        if r1.kind is not self.kind or r2.kind is not self.kind:
            raise KindMismatchError(f"{r1.value}, {r2.value} are not both {self.kind.value}")
        identity = self.kind.identity
        if r1 is identity:
            return RelationSet.of(r2, kind=self.kind)
        if r2 is identity:
            return RelationSet.of(r1, kind=self.kind)
        entry = self._table.get((r1, r2))
        if entry is None:
            return RelationSet.empty(self.kind)
        return entry

    def compose_masks(self, m1: int, m2: int) -> int:
        """Pointwise composition of two relation sets given as bitmasks"""
        return _compose_masks(self, m1, m2)

    def compose_sets(self, s1: RelationSet, s2: RelationSet) -> RelationSet:
        if s1.kind is not self.kind or s2.kind is not self.kind:
            raise KindMismatchError(f"composition of {s1.kind.value} and {s2.kind.value} sets")
        return RelationSet(self.kind, self.compose_masks(s1.mask, s2.mask))

    def __hash__(self) -> int:
        return id(self)

    def __eq__(self, other) -> bool:
        return self is other


@lru_cache(maxsize=None)
def _compose_masks(table: CompositionTable, m1: int, m2: int) -> int:
    result = 0
    size = len(table.kind.relations)
    for i in range(size):
        if not m1 & (1 << i):
            continue
        row = table._masks[i]
        for j in range(size):
            if m2 & (1 << j):
                result |= row[j]
    return result


RCC8 = CompositionTable(Kind.RCC8)
RCC5 = CompositionTable(Kind.RCC5)


def table_for(kind: Kind) -> CompositionTable:
    return RCC8 if Kind.parse(kind) is Kind.RCC8 else RCC5


def compose(r1: BaseRelation8, r2: BaseRelation8) -> RelationSet:
    """RCC8 composition (eq as identity)"""
    if not isinstance(r1, BaseRelation8) or not isinstance(r2, BaseRelation8):
        raise KindMismatchError("compose expects RCC8 relations; use compose5 for RCC5")
    return RCC8.compose(r1, r2)


def compose5(r1: BaseRelation5, r2: BaseRelation5) -> RelationSet:
    """RCC5 composition (eq as identity)"""
    if not isinstance(r1, BaseRelation5) or not isinstance(r2, BaseRelation5):
        raise KindMismatchError("compose5 expects RCC5 relations")
    return RCC5.compose(r1, r2)


def compose_sets(s1: RelationSet, s2: RelationSet) -> RelationSet:
    """Union of base compositions over all member pairs"""
    if s1.kind is not s2.kind:
        raise KindMismatchError(f"cannot compose {s1.kind.value} with {s2.kind.value}")
    return table_for(s1.kind).compose_sets(s1, s2)


@dataclass
class TableReport:
    """Findings of a composition-table audit"""

    kind: Kind
    stored_entries: int
    expected_entries: int
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.stored_entries == self.expected_entries

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "stored_entries": self.stored_entries,
            "expected_entries": self.expected_entries,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def table_meta_check(table: Optional[Mapping[Tuple[str, str], str]] = None,
                     kind: Kind = Kind.RCC8) -> TableReport:
    """
    Audit a composition table against the algebraic laws it must obey

    Checks identity laws for eq, the converse law
    converse(r∘s) = converse(s)∘converse(r), that r∘converse(r) contains eq,
    and that no stored entry is empty.

    Args:
        table: Table data to audit; the embedded table of the kind if omitted
        kind: Relation kind of the table

    Returns:
        TableReport listing every failing triple
    """
    kind = Kind.parse(kind)
    composition = CompositionTable(kind, table)
    identity = kind.identity
    expected = len(kind.proper) ** 2
    report = TableReport(kind=kind, stored_entries=composition.stored_entries, expected_entries=expected)

    for r in kind.relations:
        if composition.compose(r, identity) != RelationSet.of(r, kind=kind):
            report.violations.append(f"{r.value}∘eq != {{{r.value}}}")
        if composition.compose(identity, r) != RelationSet.of(r, kind=kind):
            report.violations.append(f"eq∘{r.value} != {{{r.value}}}")
        if identity not in composition.compose(r, r.converse()):
            report.violations.append(f"eq not in {r.value}∘{r.converse().value}")

    for r in kind.relations:
        for s in kind.relations:
            left = composition.compose(r, s)
            if r is not identity and s is not identity and left.is_empty():
                report.violations.append(f"{r.value}∘{s.value} is empty")
            right = composition.compose(s.converse(), r.converse())
            if left.converse() != right:
                report.violations.append(
                    f"converse({r.value}∘{s.value}) = {left.converse()!r} but "
                    f"{s.converse().value}∘{r.converse().value} = {right!r}"
                )

    if report.stored_entries != expected:
        report.violations.append(f"{report.stored_entries} stored entries, expected {expected}")
    LOGGER.debug("table audit %s: %d violations", kind.value, len(report.violations))
    return report
