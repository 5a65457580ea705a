"""
Three-dimensional product logic S5³ and its reduction to RCC5

An S5³ model is a product W₁×W₂×W₃ of finite sets with a valuation on
triples; ◇ᵢ varies the i-th coordinate. The reduction represents each
element of Wᵢ by an aᵢ-region, each triple by the d-region joining its
three elements, and each pair of coordinates by a d_ij-region.

The model builder uses sets of atoms as regions (dr = disjoint, pp =
proper subset, po = overlap). Only the RCC5 relations between the
constructed regions matter to the reduction, and sets of atoms realise
exactly these.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from ..logic.formula import (
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
    big_and,
    box_u,
    diamond_u,
    random_formula,
    variables,
)
from ..structures.region_structure import RegionStructure, Valuation, powerset_rcc5

LOGGER = logging.getLogger(__name__)

World = Tuple[int, int, int]

A_VARS = (Var("a1"), Var("a2"), Var("a3"))
D = Var("d")
PAIR_VARS = {(1, 2): Var("d12"), (1, 3): Var("d13"), (2, 3): Var("d23")}
RESERVED = frozenset({"a1", "a2", "a3", "d", "d12", "d13", "d23"})

# ◇ᵢ goes through the region of the other two coordinates
_OTHER_PAIR = {"1": (2, 3), "2": (1, 3), "3": (1, 2)}


@dataclass
class S53Model:
    """
    Finite S5³ model

    Args:
        sizes: |W₁|, |W₂|, |W₃|; elements of Wᵢ are 0..sizes[i]-1
        valuation: Variable name -> set of triples where it holds
    """

    sizes: Tuple[int, int, int]
    valuation: Dict[str, FrozenSet[World]] = field(default_factory=dict)

    def __post_init__(self):
        self.sizes = tuple(int(n) for n in self.sizes)
        if len(self.sizes) != 3 or min(self.sizes) < 1:
            raise ValueError(f"an S5³ model needs three positive sizes, got {self.sizes}")
        self.valuation = {name: frozenset(tuple(w) for w in worlds) for name, worlds in self.valuation.items()}
        for name, worlds in self.valuation.items():
            for w in worlds:
                self.require(w)

    def worlds(self) -> List[World]:
        return list(itertools.product(*(range(n) for n in self.sizes)))

    def require(self, world: Sequence[int]) -> World:
        world = tuple(world)
        if len(world) != 3 or any(not 0 <= c < n for c, n in zip(world, self.sizes)):
            raise ValueError(f"triple {world} is outside the model of sizes {self.sizes}")
        return world

    def to_dict(self) -> Dict:
        return {
            "sizes": list(self.sizes),
            "valuation": {name: sorted([list(w) for w in worlds]) for name, worlds in sorted(self.valuation.items())},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "S53Model":
        try:
            return cls(tuple(data["sizes"]),
                       {str(k): [tuple(w) for w in v] for k, v in data.get("valuation", {}).items()})
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed S5³ model payload: {e}")

    @classmethod
    def random(cls, rng: random.Random, sizes: Tuple[int, int, int], names: Sequence[str]) -> "S53Model":
        model = cls(sizes)
        model.valuation = {name: frozenset(w for w in model.worlds() if rng.random() < 0.5) for name in names}
        return model


def _extension(model: S53Model, phi: Formula, memo: Dict) -> FrozenSet[World]:
    key = id(phi)
    hit = memo.get(key)
    if hit is not None and hit[0] is phi:
        return hit[1]
    everything = frozenset(model.worlds())
    if isinstance(phi, Var):
        result = model.valuation.get(phi.name, frozenset())
    elif isinstance(phi, Top):
        result = everything
    elif isinstance(phi, Bottom):
        result = frozenset()
    elif isinstance(phi, Not):
        result = everything - _extension(model, phi.arg, memo)
    elif isinstance(phi, And):
        result = _extension(model, phi.left, memo) & _extension(model, phi.right, memo)
    elif isinstance(phi, Or):
        result = _extension(model, phi.left, memo) | _extension(model, phi.right, memo)
    elif isinstance(phi, Implies):
        result = (everything - _extension(model, phi.left, memo)) | _extension(model, phi.right, memo)
    elif isinstance(phi, Iff):
        left, right = _extension(model, phi.left, memo), _extension(model, phi.right, memo)
        result = (left & right) | (everything - left - right)
    elif isinstance(phi, (Box, Diamond)) and phi.modality in _OTHER_PAIR:
        axis = int(phi.modality) - 1
        inner = _extension(model, phi.arg, memo)
        result = set()
        for w in everything:
            line = [w[:axis] + (c,) + w[axis + 1:] for c in range(model.sizes[axis])]
            hits = [v in inner for v in line]
            if (all(hits) if isinstance(phi, Box) else any(hits)):
                result.add(w)
        result = frozenset(result)
    else:
        raise ValueError(f"not an S5³ formula: {phi!r}")
    memo[key] = (phi, result)
    return result


def s53_check(model: S53Model, world: Sequence[int], phi: Formula) -> bool:
    """Truth of an S5³ formula at a triple"""
    world = model.require(world)
    return world in _extension(model, phi, {})


def _sharp_diamond(modality: str, phi: Formula) -> Formula:
    pair = PAIR_VARS[_OTHER_PAIR[modality]]
    return Diamond("ppi", And(pair, Diamond("pp", And(D, phi))))


def _sharp_not(phi: Formula) -> Formula:
    return And(D, Not(phi))


def _sharp(phi: Formula) -> Formula:
    if isinstance(phi, (Var, Top)):
        return phi
    if isinstance(phi, Bottom):
        return _sharp_not(TOP)
    if isinstance(phi, Not):
        return _sharp_not(_sharp(phi.arg))
    if isinstance(phi, And):
        return And(_sharp(phi.left), _sharp(phi.right))
    if isinstance(phi, Or):
        return _sharp(Not(And(Not(phi.left), Not(phi.right))))
    if isinstance(phi, Implies):
        return _sharp(Not(And(phi.left, Not(phi.right))))
    if isinstance(phi, Iff):
        return _sharp(And(Implies(phi.left, phi.right), Implies(phi.right, phi.left)))
    if isinstance(phi, Diamond) and phi.modality in _OTHER_PAIR:
        return _sharp_diamond(phi.modality, _sharp(phi.arg))
    if isinstance(phi, Box) and phi.modality in _OTHER_PAIR:
        return _sharp(Not(Diamond(phi.modality, Not(phi.arg))))
    if isinstance(phi, Nom):
        raise ValueError("nominals are not part of the S5³ language")
    raise ValueError(f"not an S5³ formula: {phi!r}")


def sharp_translate(phi: Formula) -> Formula:
    """
    RCC5 formula true at the d-region of a triple iff φ holds at the triple

    Negation is relativised to d; ◇₁φ becomes <ppi>(d23 ∧ <pp>(d ∧ φ♯)),
    and likewise for ◇₂ (via d13) and ◇₃ (via d12). Derived connectives
    and boxes are rewritten into ¬, ∧ and ◇ first.
    """
    clash = variables(phi) & RESERVED
    if clash:
        raise ValueError(f"variable(s) {', '.join(sorted(clash))} are reserved by the reduction")
    return _sharp(phi)


def chi_groups() -> List[Formula]:
    """
    The five conjunct groups of χ

    aᵢ-regions are pairwise disconnected; each belongs to one Wᵢ; every Wᵢ
    is non-empty; d marks the least regions above one element of each Wᵢ;
    d_ij marks the least regions above one element of Wᵢ and one of Wⱼ.
    """
    disjoint = big_and(
        Implies(ai, big_and(And(And(Box("pp", Not(aj)), Box("ppi", Not(aj))), Box("po", Not(aj)))
                            for aj in A_VARS))
        for ai in A_VARS
    )
    a1, a2, a3 = A_VARS
    unique = big_and([Implies(a1, Not(a2)), Implies(a1, Not(a3)), Implies(a2, Not(a3))])
    nonempty = big_and(diamond_u(ai) for ai in A_VARS)

    def least_above(indices) -> Formula:
        above = big_and(Diamond("ppi", A_VARS[k - 1]) for k in indices)
        return And(above, Not(Diamond("ppi", above)))

    triples = Iff(D, least_above((1, 2, 3)))
    pairs = big_and(Iff(var, least_above(pair)) for pair, var in sorted(PAIR_VARS.items()))
    return [disjoint, unique, nonempty, triples, pairs]


def chi_rcc5() -> Formula:
    return big_and(chi_groups())


def s53_reduction(phi: Formula) -> Formula:
    """□_u χ ∧ d ∧ φ♯"""
    return big_and([box_u(chi_rcc5()), D, sharp_translate(phi)])


def atom_region(axis: int, element: int) -> str:
    return f"w{axis}_{element}"


def pair_region(axes: Tuple[int, int], elements: Tuple[int, int]) -> str:
    return f"w{axes[0]}{axes[1]}_{elements[0]}_{elements[1]}"


def triple_region(world: Sequence[int]) -> str:
    """Region id of the d-region representing a triple"""
    return "w_" + "_".join(str(c) for c in world)


def model_from_s53(model: S53Model) -> Tuple[RegionStructure, Valuation]:
    """
    RCC5 model of □_u χ in which the triple region of w satisfies φ♯ iff w satisfies φ

    Atoms are the elements of W₁ ⊎ W₂ ⊎ W₃; the regions are the single
    atoms, every pair of atoms from different Wᵢ and every triple with one
    atom from each Wᵢ.
    """
    clash = set(model.valuation) & RESERVED
    if clash:
        raise ValueError(f"variable(s) {', '.join(sorted(clash))} are reserved by the reduction")
    ids: List[str] = []
    sets: List[FrozenSet] = []
    assignment: Dict[str, List[str]] = {v.name: [] for v in A_VARS + (D,) + tuple(PAIR_VARS.values())}
    for axis, n in enumerate(model.sizes, start=1):
        for e in range(n):
            ids.append(atom_region(axis, e))
            sets.append(frozenset({(axis, e)}))
            assignment[f"a{axis}"].append(ids[-1])
    for (i, j), var in sorted(PAIR_VARS.items()):
        for ei in range(model.sizes[i - 1]):
            for ej in range(model.sizes[j - 1]):
                ids.append(pair_region((i, j), (ei, ej)))
                sets.append(frozenset({(i, ei), (j, ej)}))
                assignment[var.name].append(ids[-1])
    for w in model.worlds():
        ids.append(triple_region(w))
        sets.append(frozenset({(1, w[0]), (2, w[1]), (3, w[2])}))
        assignment[D.name].append(ids[-1])
    for name, worlds in model.valuation.items():
        assignment[name] = [triple_region(w) for w in sorted(worlds)]
    structure = powerset_rcc5(sets, ids)
    LOGGER.debug("S5³ model of sizes %s -> %d regions", model.sizes, structure.size)
    return structure, Valuation(assignment)


def random_s53_formula(rng: random.Random, names: Sequence[str], depth: int = 3) -> Formula:
    return random_formula(rng, names, depth, Mode.S53)
