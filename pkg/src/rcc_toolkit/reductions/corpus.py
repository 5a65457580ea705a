"""
Formulas and networks that separate logics of different region structures,
and a small geographic knowledge base
"""

import itertools
from typing import Dict, List, Tuple

from ..algebra.relations import BaseRelation8, Kind, RelationSet
from ..geometry.intervals import IntervalUnion
from ..logic.formula import (
    TOP,
    And,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Nom,
    Not,
    Or,
    Var,
    big_and,
    box_u,
    diamond_u,
)
from ..solver.network import ConstraintNetwork
from ..structures.region_structure import RegionStructure, Valuation, induced

EC = RelationSet.of("ec", kind=Kind.RCC8)
PP = RelationSet.of("tpp", "ntpp", kind=Kind.RCC8)


def ec_k(k: int) -> ConstraintNetwork:
    """k variables, pairwise externally connected"""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    names = [f"x{i}" for i in range(1, k + 1)]
    return ConstraintNetwork(names, {(a, b): EC for a, b in itertools.combinations(names, 2)})


def ec4_hull_network() -> ConstraintNetwork:
    """
    ec[4] plus a region x_ij per pair that has x_i and x_j as proper parts
    and touches the other two from outside
    """
    base = [f"x{i}" for i in range(1, 5)]
    pairs = list(itertools.combinations(range(1, 5), 2))
    hulls = {pair: f"x{pair[0]}{pair[1]}" for pair in pairs}
    constraints = {(a, b): EC for a, b in itertools.combinations(base, 2)}
    for (i, j), hull in hulls.items():
        constraints[(f"x{i}", hull)] = PP
        constraints[(f"x{j}", hull)] = PP
        for k in range(1, 5):
            if k not in (i, j):
                constraints[(hull, f"x{k}")] = EC
    return ConstraintNetwork(base + list(hulls.values()), constraints)


def loeb_formula(name: str = "p") -> Formula:
    """[pp]([pp]p -> p) -> [pp]p, valid exactly without infinite ascending pp-chains"""
    p = Var(name)
    return Implies(Box("pp", Implies(Box("pp", p), p)), Box("pp", p))


def disconnected_parts_formula() -> Formula:
    """Any two disconnected regions are proper parts of a common region"""
    p, q = Var("p"), Var("q")
    premise = big_and([Nom(p), Nom(q), diamond_u(And(p, Diamond("dc", q)))])
    return Implies(premise, diamond_u(And(Diamond("ppi", p), Diamond("ppi", q))))


def proper_part_exists() -> Formula:
    """Every region has a proper part"""
    return Diamond("ppi", TOP)


def three_disconnected_formula() -> Formula:
    """Of three pairwise disconnected regions, some region contains the first two but not the third"""
    ps = [Var(f"p{i}") for i in range(1, 4)]
    premise = big_and(
        [Nom(p) for p in ps]
        + [diamond_u(And(ps[i], Diamond("dc", ps[j]))) for i, j in itertools.combinations(range(3), 2)]
    )
    return Implies(premise, diamond_u(big_and([
        Diamond("ppi", ps[0]), Diamond("ppi", ps[1]), Not(Diamond("ppi", ps[2])),
    ])))


def harbor_model() -> Tuple[RegionStructure, Valuation]:
    """
    Four regions on the line: a sea, the river Elbe touching it, the city
    of Dresden overlapping the river, and a harbour inside Dresden on the
    river bank
    """
    regions = {
        "sea": IntervalUnion.single(0, 4),
        "elbe": IntervalUnion.single(4, 10),
        "dresden": IntervalUnion.single(9, 13),
        "harbor": IntervalUnion.single(10, 11),
    }
    ids = list(regions)
    structure = induced([regions[r] for r in ids], ids, kind=Kind.RCC8)
    valuation = Valuation({
        "sea": ["sea"],
        "river": ["elbe"],
        "city": ["dresden"],
        "harbor_city": ["dresden"],
        "harbor": ["harbor"],
        "dresden": ["dresden"],
        "elbe": ["elbe"],
    })
    return structure, valuation


def harbor_formulas() -> Dict[str, Formula]:
    """Background theory, facts about Dresden and the Elbe, and their consequence"""
    harbor_city, city, harbor = Var("harbor_city"), Var("city"), Var("harbor")
    river, sea, dresden, elbe = Var("river"), Var("sea"), Var("dresden"), Var("elbe")
    touching = [r.value for r in Kind.RCC8.relations if r is not BaseRelation8.DC]
    return {
        "harbor_city": box_u(Iff(harbor_city, And(city, Diamond("ppi", harbor)))),
        "harbor": box_u(Implies(harbor, Or(Diamond("ec", river), Diamond("ec", sea)))),
        "dresden_harbor_city": box_u(Implies(dresden, harbor_city)),
        "elbe_river": box_u(Implies(elbe, river)),
        "dresden_no_sea": box_u(Implies(dresden, big_and(Box(r, Not(sea)) for r in touching))),
        "dresden_on_elbe": box_u(Implies(dresden, And(
            Diamond("po", elbe), big_and(Box(r, Implies(river, elbe)) for r in touching)))),
        "nominals": And(Nom(elbe), Nom(dresden)),
        "consequence": box_u(Implies(dresden, Diamond("ppi", And(harbor, Diamond("ec", elbe))))),
    }


def corpus_names() -> List[str]:
    return ["ec_k", "ec4_hull", "loeb", "disconnected_parts", "proper_part", "three_disconnected", "harbor"]
