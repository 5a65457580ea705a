"""
Macro expansion and model checking over finite region structures
"""

import logging
from typing import Dict, FrozenSet, Mapping, Optional, Union

from ..algebra.relations import Kind, parse_relation
from ..errors import KindMismatchError
from ..structures.region_structure import RegionStructure, Valuation
from .formula import (
    DIFFERENCE,
    TOP,
    UNIVERSAL,
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
    big_and,
)

LOGGER = logging.getLogger(__name__)

# Marker variables of the grid macros.
MARK_A, MARK_B, MARK_C = "a", "b", "c"


def _diamond(modality: str, phi: Formula) -> Formula:
    return Not(Box(modality, Not(phi)))


def _grid_diamond(name: str, phi: Formula, mode: Mode, memo: Dict) -> Formula:
    a, b, c = Var(MARK_A), Var(MARK_B), Var(MARK_C)
    if name == "next":
        inner = And(And(a, b), phi)
        return _expand(Diamond("tpp", And(And(a, Not(b)), Diamond("tpp", inner))), mode, memo)
    if name == "prev":
        inner = And(And(a, b), phi)
        return _expand(Diamond("tppi", And(And(a, Not(b)), Diamond("tppi", inner))), mode, memo)
    if name == "right":
        return _expand(Diamond("tpp", And(c, Diamond("tpp", And(And(a, b), phi)))), mode, memo)
    if name == "left":
        return _expand(Diamond("tppi", And(c, Diamond("tppi", And(And(a, b), phi)))), mode, memo)
    if name == "up":
        return _expand(Diamond("right", Diamond("next", phi)), mode, memo)
    if name == "down":
        # reverse walk of up: a wall position has no left neighbour
        return _expand(Diamond("prev", Diamond("left", phi)), mode, memo)
    raise ValueError(f"unknown modality: {name!r}")


def _box_macro(name: str, phi: Formula, mode: Mode, memo: Dict) -> Formula:
    """Core form of [name]φ for a defined modality"""
    kind = mode.kind
    if name == DIFFERENCE:
        return big_and(Box(r.value, phi) for r in kind.proper)
    if name == UNIVERSAL:
        return And(phi, _box_macro(DIFFERENCE, phi, mode, memo))
    if name == "pp" and mode is Mode.RCC8:
        return And(Box("tpp", phi), Box("ntpp", phi))
    if name == "ppi" and mode is Mode.RCC8:
        return And(Box("tppi", phi), Box("ntppi", phi))
    # grid macros are diamonds: [m]φ = ¬<m>¬φ
    return Not(_grid_diamond(name, Not(phi), mode, memo))


def _is_base(modality: str, mode: Mode) -> bool:
    if mode is Mode.S53:
        return modality in ("1", "2", "3")
    if mode is Mode.RCC8 and modality in ("pp", "ppi"):
        return False
    return modality in {r.value for r in mode.kind.relations}


def expand(phi: Formula, mode: Union[Mode, Kind, str] = Mode.RCC8) -> Formula:
    """
    Rewrite a formula into the core Var/Top/Not/And/Box language

    Defined modalities expand as displayed: [d] is the conjunction of the
    boxes over every relation except eq, [u]φ = φ ∧ [d]φ, nom(φ) =
    <u>(φ ∧ [d]¬φ), [pp] (RCC8) = [tpp] ∧ [ntpp], and the grid diamonds
    walk the a/b/c marker regions. Shared subformulas stay shared.
    """
    return _expand(phi, Mode.parse(mode), {})


def _expand(phi: Formula, mode: Mode, memo: Dict) -> Formula:
    key = id(phi)
    hit = memo.get(key)
    if hit is not None and hit[0] is phi:
        return hit[1]
    result = _expand_node(phi, mode, memo)
    memo[key] = (phi, result)
    return result


def _expand_node(phi: Formula, mode: Mode, memo: Dict) -> Formula:
    if isinstance(phi, (Var, Top)):
        return phi
    if isinstance(phi, Bottom):
        return Not(TOP)
    if isinstance(phi, Not):
        return Not(_expand(phi.arg, mode, memo))
    if isinstance(phi, And):
        return And(_expand(phi.left, mode, memo), _expand(phi.right, mode, memo))
    if isinstance(phi, Or):
        return Not(And(Not(_expand(phi.left, mode, memo)), Not(_expand(phi.right, mode, memo))))
    if isinstance(phi, Implies):
        return Not(And(_expand(phi.left, mode, memo), Not(_expand(phi.right, mode, memo))))
    if isinstance(phi, Iff):
        left, right = _expand(phi.left, mode, memo), _expand(phi.right, mode, memo)
        return And(Not(And(left, Not(right))), Not(And(right, Not(left))))
    if isinstance(phi, Nom):
        arg = _expand(phi.arg, mode, memo)
        inner = And(arg, _box_macro(DIFFERENCE, Not(arg), mode, memo))
        return Not(_box_macro(UNIVERSAL, Not(inner), mode, memo))
    if isinstance(phi, (Box, Diamond)):
        if mode is not Mode.RCC8 and not _is_base(phi.modality, mode) and (
                mode is Mode.S53 or phi.modality not in (UNIVERSAL, DIFFERENCE)):
            raise KindMismatchError(f"modality {phi.modality!r} is not available in {mode.value} mode")
        arg = _expand(phi.arg, mode, memo)
        if _is_base(phi.modality, mode):
            return Box(phi.modality, arg) if isinstance(phi, Box) else _diamond(phi.modality, arg)
        if isinstance(phi, Box):
            return _box_macro(phi.modality, arg, mode, memo)
        if phi.modality in (UNIVERSAL, DIFFERENCE, "pp", "ppi"):
            return Not(_box_macro(phi.modality, Not(arg), mode, memo))
        return _grid_diamond(phi.modality, arg, mode, memo)
    raise TypeError(f"not a formula: {phi!r}")


class ModelChecker:
    """
    Extensions of formulas in one model, as region bitmasks

    Bit i of a mask stands for structure.regions[i]. Extensions are
    computed bottom-up on the expanded core and memoised per node.

    With width w > 1 the checker evaluates w valuations at once: bit
    i*w + v stands for region i under valuation v, and every variable
    mask uses the same layout.
    """

    def __init__(self, structure: RegionStructure, valuation: Mapping[str, int],
                 successors: Optional[Dict[str, tuple]] = None, width: int = 1):
        self.structure = structure
        self.valuation = valuation
        self.width = width
        self.block = (1 << width) - 1
        self.full = (1 << (structure.size * width)) - 1
        # may be shared between checkers over the same structure
        self._successors: Dict[str, tuple] = successors if successors is not None else {}
        self._memo: Dict[int, tuple] = {}

    @classmethod
    def for_valuation(cls, structure: RegionStructure, valuation: Optional[Valuation]) -> "ModelChecker":
        masks = {}
        if valuation is not None:
            for name, ids in valuation.assignment.items():
                mask = 0
                for region in ids:
                    if region in structure.regions:
                        mask |= 1 << structure.index(region)
                masks[name] = mask
        return cls(structure, masks)

    def successor_masks(self, modality: str) -> tuple:
        cached = self._successors.get(modality)
        if cached is None:
            relation = parse_relation(modality, self.structure.kind)
            cached = tuple(sum(1 << j for j in targets) for targets in self.structure.successors(relation))
            self._successors[modality] = cached
        return cached

    def extension(self, core: Formula) -> int:
        key = id(core)
        hit = self._memo.get(key)
        if hit is not None and hit[0] is core:
            return hit[1]
        result = self._compute(core)
        self._memo[key] = (core, result)
        return result

    def _compute(self, core: Formula) -> int:
        if isinstance(core, Var):
            return self.valuation.get(core.name, 0) & self.full
        if isinstance(core, Top):
            return self.full
        if isinstance(core, Not):
            return self.full & ~self.extension(core.arg)
        if isinstance(core, And):
            return self.extension(core.left) & self.extension(core.right)
        if isinstance(core, Box):
            inside = self.extension(core.arg)
            mask = 0
            if self.width == 1:
                outside = ~inside
                for i, succ in enumerate(self.successor_masks(core.modality)):
                    if not succ & outside:
                        mask |= 1 << i
                return mask
            w, block = self.width, self.block
            relation = parse_relation(core.modality, self.structure.kind)
            for i, targets in enumerate(self.structure.successors(relation)):
                holds = block
                for j in targets:
                    holds &= inside >> (j * w)
                mask |= (holds & block) << (i * w)
            return mask
        raise TypeError(f"not a core formula: {core!r}")


def _mode_of(structure: RegionStructure) -> Mode:
    return Mode.RCC8 if structure.kind is Kind.RCC8 else Mode.RCC5


def extension(structure: RegionStructure, valuation: Optional[Valuation], phi: Formula) -> FrozenSet[str]:
    """Regions at which φ holds"""
    checker = ModelChecker.for_valuation(structure, valuation)
    mask = checker.extension(expand(phi, _mode_of(structure)))
    return frozenset(structure.regions[i] for i in range(structure.size) if mask >> i & 1)


def check(structure: RegionStructure, valuation: Optional[Valuation], region: str, phi: Formula) -> bool:
    """
    Truth of φ at one region

    Args:
        structure: Region structure whose kind matches the formula's alphabet
        valuation: Variable interpretation; unknown variables are false everywhere
        region: Region id
        phi: Formula

    Returns:
        Whether the model satisfies φ at the region
    """
    index = structure.index(region)
    checker = ModelChecker.for_valuation(structure, valuation)
    return bool(checker.extension(expand(phi, _mode_of(structure))) >> index & 1)


def valid_in(structure: RegionStructure, valuation: Optional[Valuation], phi: Formula) -> bool:
    """φ holds at every region"""
    checker = ModelChecker.for_valuation(structure, valuation)
    return checker.extension(expand(phi, _mode_of(structure))) == checker.full


def sat_in(structure: RegionStructure, valuation: Optional[Valuation], phi: Formula) -> Optional[str]:
    """First region (in structure order) where φ holds, or None"""
    checker = ModelChecker.for_valuation(structure, valuation)
    mask = checker.extension(expand(phi, _mode_of(structure)))
    if not mask:
        return None
    return structure.regions[(mask & -mask).bit_length() - 1]
