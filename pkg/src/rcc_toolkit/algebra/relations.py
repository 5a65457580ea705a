"""
Base relations of RCC8 and RCC5 and relation sets over them
"""

from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Optional, Union

from ..errors import KindMismatchError


class Kind(Enum):
    """Relation vocabulary of a structure, network or formula"""

    RCC8 = "rcc8"
    RCC5 = "rcc5"

    @property
    def relations(self) -> tuple:
        """Base relations of this kind in canonical order"""
        return tuple(BaseRelation8) if self is Kind.RCC8 else tuple(BaseRelation5)

    @property
    def identity(self) -> "BaseRelation":
        return BaseRelation8.EQ if self is Kind.RCC8 else BaseRelation5.EQ

    @property
    def proper(self) -> tuple:
        """All base relations except eq, in canonical order"""
        return tuple(r for r in self.relations if r is not self.identity)

    @classmethod
    def parse(cls, value: Union[str, "Kind"]) -> "Kind":
        if isinstance(value, Kind):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown relation kind: {value!r}")


class BaseRelation8(Enum):
    """The eight RCC8 relations; declaration order is the canonical order"""

    DC = "dc"
    EC = "ec"
    PO = "po"
    EQ = "eq"
    TPP = "tpp"
    NTPP = "ntpp"
    TPPI = "tppi"
    NTPPI = "ntppi"

    @property
    def kind(self) -> Kind:
        return Kind.RCC8

    @property
    def index(self) -> int:
        return _INDEX8[self]

    @property
    def bit(self) -> int:
        return 1 << _INDEX8[self]

    def converse(self) -> "BaseRelation8":
        return _CONVERSE8[self]

    def __str__(self) -> str:
        return self.value


class BaseRelation5(Enum):
    """The five RCC5 relations; declaration order is the canonical order"""

    DR = "dr"
    PO = "po"
    EQ = "eq"
    PP = "pp"
    PPI = "ppi"

    @property
    def kind(self) -> Kind:
        return Kind.RCC5

    @property
    def index(self) -> int:
        return _INDEX5[self]

    @property
    def bit(self) -> int:
        return 1 << _INDEX5[self]

    def converse(self) -> "BaseRelation5":
        return _CONVERSE5[self]

    def __str__(self) -> str:
        return self.value


BaseRelation = Union[BaseRelation8, BaseRelation5]

_INDEX8 = {r: i for i, r in enumerate(BaseRelation8)}
_INDEX5 = {r: i for i, r in enumerate(BaseRelation5)}

_CONVERSE8 = {
    BaseRelation8.DC: BaseRelation8.DC,
    BaseRelation8.EC: BaseRelation8.EC,
    BaseRelation8.PO: BaseRelation8.PO,
    BaseRelation8.EQ: BaseRelation8.EQ,
    BaseRelation8.TPP: BaseRelation8.TPPI,
    BaseRelation8.NTPP: BaseRelation8.NTPPI,
    BaseRelation8.TPPI: BaseRelation8.TPP,
    BaseRelation8.NTPPI: BaseRelation8.NTPP,
}

_CONVERSE5 = {
    BaseRelation5.DR: BaseRelation5.DR,
    BaseRelation5.PO: BaseRelation5.PO,
    BaseRelation5.EQ: BaseRelation5.EQ,
    BaseRelation5.PP: BaseRelation5.PPI,
    BaseRelation5.PPI: BaseRelation5.PP,
}

_COARSEN = {
    BaseRelation8.DC: BaseRelation5.DR,
    BaseRelation8.EC: BaseRelation5.DR,
    BaseRelation8.PO: BaseRelation5.PO,
    BaseRelation8.EQ: BaseRelation5.EQ,
    BaseRelation8.TPP: BaseRelation5.PP,
    BaseRelation8.NTPP: BaseRelation5.PP,
    BaseRelation8.TPPI: BaseRelation5.PPI,
    BaseRelation8.NTPPI: BaseRelation5.PPI,
}


def converse(r: BaseRelation) -> BaseRelation:
    """Converse of a base relation; tpp <-> tppi, ntpp <-> ntppi, pp <-> ppi"""
    return r.converse()


def coarsen(r: BaseRelation8) -> BaseRelation5:
    """Map an RCC8 relation to the RCC5 relation containing it"""
    if not isinstance(r, BaseRelation8):
        raise KindMismatchError(f"coarsen expects an RCC8 relation, got {r!r}")
    return _COARSEN[r]


def parse_relation(name: str, kind: Optional[Union[str, Kind]] = None) -> BaseRelation:
    """
    Look up a base relation by its lowercase name

    Args:
        name: Relation name such as 'tpp' or 'dr'
        kind: Restrict the lookup to one vocabulary; None accepts both,
            preferring RCC8 for the shared names po and eq

    Returns:
        The matching base relation
    """
    key = name.strip().lower()
    if kind is not None:
        kind = Kind.parse(kind)
        for r in kind.relations:
            if r.value == key:
                return r
        raise ValueError(f"unknown {kind.value} relation: {name!r}")
    for r in BaseRelation8:
        if r.value == key:
            return r
    for r in BaseRelation5:
        if r.value == key:
            return r
    raise ValueError(f"unknown relation: {name!r}")


class RelationSet:
    """
    Immutable set of base relations of one kind, stored as a bitmask

    Equality is structural (kind and members); iteration follows the
    canonical order of the kind.
    """

    __slots__ = ("kind", "mask")

    def __init__(self, kind: Kind, mask: int = 0):
        full = (1 << len(kind.relations)) - 1
        if mask & ~full:
            raise KindMismatchError(f"mask {mask:#x} has bits outside {kind.value}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("RelationSet is immutable")

    @classmethod
    def of(cls, *relations: Union[BaseRelation, str], kind: Optional[Kind] = None) -> "RelationSet":
        """Build a set from relations or relation names"""
        members = [parse_relation(r, kind) if isinstance(r, str) else r for r in relations]
        if kind is None:
            kind = members[0].kind if members else Kind.RCC8
        mask = 0
        for r in members:
            if r.kind is not kind:
                raise KindMismatchError(f"{r.value} is not an {kind.value} relation")
            mask |= r.bit
        return cls(kind, mask)

    @classmethod
    def full(cls, kind: Kind = Kind.RCC8) -> "RelationSet":
        return cls(kind, (1 << len(kind.relations)) - 1)

    @classmethod
    def empty(cls, kind: Kind = Kind.RCC8) -> "RelationSet":
        return cls(kind, 0)

    @classmethod
    def from_names(cls, names: Iterable[str], kind: Kind = Kind.RCC8) -> "RelationSet":
        return cls.of(*[parse_relation(n, kind) for n in names], kind=kind)

    def _same_kind(self, other: "RelationSet") -> None:
        if self.kind is not other.kind:
            raise KindMismatchError(f"cannot combine {self.kind.value} and {other.kind.value} sets")

    def union(self, other: "RelationSet") -> "RelationSet":
        self._same_kind(other)
        return RelationSet(self.kind, self.mask | other.mask)

    def intersection(self, other: "RelationSet") -> "RelationSet":
        self._same_kind(other)
        return RelationSet(self.kind, self.mask & other.mask)

    __or__ = union
    __and__ = intersection

    def converse(self) -> "RelationSet":
        mask = 0
        for r in self:
            mask |= r.converse().bit
        return RelationSet(self.kind, mask)

    def is_empty(self) -> bool:
        return self.mask == 0

    def is_full(self) -> bool:
        return self.mask == (1 << len(self.kind.relations)) - 1

    def is_singleton(self) -> bool:
        return self.mask != 0 and self.mask & (self.mask - 1) == 0

    def single(self) -> BaseRelation:
        """The only member of a singleton set"""
        if not self.is_singleton():
            raise ValueError(f"{self} is not a singleton")
        return next(iter(self))

    def issubset(self, other: "RelationSet") -> bool:
        self._same_kind(other)
        return self.mask & ~other.mask == 0

    def __contains__(self, r: BaseRelation) -> bool:
        return r.kind is self.kind and bool(self.mask & r.bit)

    def __iter__(self) -> Iterator[BaseRelation]:
        for r in self.kind.relations:
            if self.mask & r.bit:
                yield r

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other) -> bool:
        if isinstance(other, RelationSet):
            return self.kind is other.kind and self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return frozenset(self) == frozenset(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.kind, self.mask))

    def members(self) -> FrozenSet[BaseRelation]:
        return frozenset(self)

    def to_names(self) -> List[str]:
        return [r.value for r in self]

    def __repr__(self) -> str:
        return "{" + ", ".join(self.to_names()) + "}"


def refine(r: BaseRelation5) -> RelationSet:
    """RCC8 relations that coarsen to the given RCC5 relation"""
    return RelationSet.of(*[r8 for r8 in BaseRelation8 if _COARSEN[r8] is r], kind=Kind.RCC8)
