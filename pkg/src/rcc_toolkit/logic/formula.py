"""
Modal formula AST

Formulas are immutable trees. Sugar nodes (Or, Implies, Iff, Diamond,
Nom, Bottom and the macro modalities) are kept for printing and are
removed by ``semantics.expand``.
"""

import random
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..algebra.relations import Kind


class Mode(Enum):
    """Alphabet a formula is written in"""

    RCC8 = "rcc8"
    RCC5 = "rcc5"
    S53 = "s53"

    @property
    def kind(self) -> Optional[Kind]:
        return {Mode.RCC8: Kind.RCC8, Mode.RCC5: Kind.RCC5}.get(self)

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, Mode):
            return value
        if isinstance(value, Kind):
            return cls(value.value)
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown formula mode: {value!r}")


# Defined modalities of the region languages.
UNIVERSAL = "u"
DIFFERENCE = "d"
GRID_MACROS = ("next", "prev", "right", "up", "left", "down")
RCC8_MACROS = (UNIVERSAL, DIFFERENCE, "pp", "ppi") + GRID_MACROS
RCC5_MACROS = (UNIVERSAL, DIFFERENCE)
S53_MODALITIES = ("1", "2", "3")


def base_modalities(mode: Mode) -> Tuple[str, ...]:
    if mode is Mode.S53:
        return S53_MODALITIES
    return tuple(r.value for r in mode.kind.relations)


def modalities(mode: Mode) -> Tuple[str, ...]:
    """Every modality name accepted in the given mode"""
    mode = Mode.parse(mode)
    if mode is Mode.RCC8:
        return base_modalities(mode) + tuple(m for m in RCC8_MACROS if m not in base_modalities(mode))
    if mode is Mode.RCC5:
        return base_modalities(mode) + RCC5_MACROS
    return S53_MODALITIES


class Formula:
    """Base class of every modal formula node"""

    __slots__ = ()

    def __str__(self) -> str:
        from .parser import format_formula
        return format_formula(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    modality: str
    arg: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    modality: str
    arg: Formula


@dataclass(frozen=True)
class Nom(Formula):
    arg: Formula


TOP = Top()
BOTTOM = Bottom()


def big_and(formulas: Iterable[Formula]) -> Formula:
    """Balanced conjunction; true for an empty list"""
    items = list(formulas)
    if not items:
        return TOP
    while len(items) > 1:
        items = [And(items[i], items[i + 1]) if i + 1 < len(items) else items[i]
                 for i in range(0, len(items), 2)]
    return items[0]


def big_or(formulas: Iterable[Formula]) -> Formula:
    """Balanced disjunction; false for an empty list"""
    items = list(formulas)
    if not items:
        return BOTTOM
    while len(items) > 1:
        items = [Or(items[i], items[i + 1]) if i + 1 < len(items) else items[i]
                 for i in range(0, len(items), 2)]
    return items[0]


def box_u(phi: Formula) -> Formula:
    return Box(UNIVERSAL, phi)


def diamond_u(phi: Formula) -> Formula:
    return Diamond(UNIVERSAL, phi)


def homogeneous(phi: Formula) -> Formula:
    """Every proper part of a φ-region is a φ-region"""
    return box_u(Implies(phi, Box("pp", phi)))


def anti_homogeneous(phi: Formula) -> Formula:
    """No proper part of, and no region overlapping, a φ-region satisfies φ"""
    return box_u(Implies(phi, And(Box("pp", Not(phi)), Box("po", Not(phi)))))


def children(phi: Formula) -> Tuple[Formula, ...]:
    if isinstance(phi, (Not, Box, Diamond, Nom)):
        return (phi.arg,)
    if isinstance(phi, (And, Or, Implies, Iff)):
        return (phi.left, phi.right)
    return ()


def variables(phi: Formula) -> FrozenSet[str]:
    """Propositional variables occurring in φ"""
    found = set()
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.name)
        stack.extend(children(node))
    return frozenset(found)


def size(phi: Formula) -> int:
    return 1 + sum(size(c) for c in children(phi))


def depth(phi: Formula) -> int:
    """Modal depth: nesting of Box/Diamond/Nom"""
    inner = max((depth(c) for c in children(phi)), default=0)
    return inner + 1 if isinstance(phi, (Box, Diamond, Nom)) else inner


def random_formula(rng: random.Random, names: Sequence[str], depth: int = 3,
                   mode: Mode = Mode.RCC8, modal_names: Optional[Sequence[str]] = None) -> Formula:
    """
    Random formula over the given variables, using sugar nodes as well

    Args:
        rng: Random source
        names: Variable names to draw atoms from
        depth: Maximal nesting of connectives
        mode: Alphabet of the modalities
        modal_names: Modalities to draw from (base relations of the mode by default)
    """
    mode = Mode.parse(mode)
    pool: List[str] = list(modal_names) if modal_names is not None else list(base_modalities(mode))
    if depth <= 0 or rng.random() < 0.2:
        roll = rng.random()
        if roll < 0.08:
            return TOP
        if roll < 0.12:
            return BOTTOM
        return Var(rng.choice(list(names)))
    pick = rng.randrange(9)
    sub = lambda: random_formula(rng, names, depth - 1, mode, pool)
    if pick == 0:
        return Not(sub())
    if pick == 1:
        return And(sub(), sub())
    if pick == 2:
        return Or(sub(), sub())
    if pick == 3:
        return Implies(sub(), sub())
    if pick == 4:
        return Iff(sub(), sub())
    if pick in (5, 6):
        return Box(rng.choice(pool), sub())
    if pick == 7:
        return Diamond(rng.choice(pool), sub())
    return Nom(sub()) if mode is not Mode.S53 else Diamond(rng.choice(pool), sub())
