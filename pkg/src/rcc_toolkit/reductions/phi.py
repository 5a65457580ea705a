"""
Reduction formulas from domino systems to region-logic satisfiability

The formulas mark a discrete ntpp-chain of a∧b regions (one per
position of the quadrant), the a∧¬b regions between consecutive ones,
and c regions leading from a position to the one on its right. The grid
modalities <next>, <prev>, <right>, <left>, <up> and <down> walk these
markers.

The conjunct groups of χ come as a list: first the pp-ordering of the
a-regions, then the discreteness of the a∧b chain, the c links, the wall
and floor groups that pin the right step down, and last the tiling groups
(one tile per position, H and V).
"""

import logging
from typing import List

from ..errors import MissingTileError
from ..logic.formula import (
    TOP,
    And,
    Box,
    Diamond,
    Formula,
    Implies,
    Not,
    Or,
    Var,
    big_and,
    big_or,
    box_u,
)
from .domino import DominoSystem

LOGGER = logging.getLogger(__name__)

A, B, C = Var("a"), Var("b"), Var("c")
WALL, FLOOR = Var("wall"), Var("floor")
VOCABULARY = ("a", "b", "c", "wall", "floor")

AB = And(A, B)
A_NOT_B = And(A, Not(B))


def _next(phi: Formula) -> Formula:
    return Diamond("next", phi)


def _right(phi: Formula) -> Formula:
    return Diamond("right", phi)


def _up(phi: Formula) -> Formula:
    return Diamond("up", phi)


def _tile(system: DominoSystem, tile: str) -> Formula:
    return Var(system.tile_variable(tile))


def _boxes_not(relations, phi: Formula) -> Formula:
    return big_and(Box(r, Not(phi)) for r in relations)


def _at_most_one_tile(system: DominoSystem) -> Formula:
    tiles = system.tiles
    return big_and(
        Not(And(_tile(system, t), _tile(system, u)))
        for i, t in enumerate(tiles) for u in tiles[i + 1:]
    )


def _matching(system: DominoSystem, pairs, step) -> Formula:
    return big_or(And(_tile(system, t), step(_tile(system, u))) for t, u in sorted(pairs))


def chi_d(system: DominoSystem) -> List[Formula]:
    """The seventeen conjunct groups of χ for quadrant tilings"""
    if not system.tiles:
        raise ValueError("domino system has no tiles")
    return [
        Implies(A, _boxes_not(("dc", "ec", "po"), A)),
        Implies(AB, Diamond("tpp", A_NOT_B)),
        Implies(A_NOT_B, Diamond("tpp", AB)),
        Implies(A_NOT_B, Box("tpp", Implies(A, B))),
        Implies(AB, Box("tpp", Implies(A, Not(B)))),
        Implies(AB, Diamond("tpp", C)),
        Implies(C, Diamond("tpp", AB)),
        Implies(C, _boxes_not(("dc", "ec", "po", "tpp", "tppi"), C)),
        Implies(And(FLOOR, WALL), Box("ntppi", Not(A))),
        Implies(WALL, _next(FLOOR)),
        Implies(WALL, _up(WALL)),
        Or(Box("ntppi", Not(A)), Implies(WALL, Diamond("down", WALL))),
        Implies(AB, _right(Not(WALL))),
        Implies(And(AB, Not(WALL)), Diamond("left", TOP)),
        _at_most_one_tile(system),
        Implies(AB, _matching(system, system.h, _right)),
        Implies(AB, _matching(system, system.v, _up)),
    ]


def phi_d(system: DominoSystem) -> Formula:
    """a ∧ b ∧ wall ∧ floor ∧ [ntppi]¬a ∧ □_u χ"""
    groups = chi_d(system)
    return big_and([A, B, WALL, FLOOR, Box("ntppi", Not(A)), box_u(big_and(groups))])


def recurring_groups(system: DominoSystem) -> List[Formula]:
    """The two conjuncts forcing t0 infinitely often on the wall and a single limit region"""
    if system.t0 is None:
        raise MissingTileError("t0")
    t0 = _tile(system, system.t0)
    return [
        box_u(Implies(AB, Diamond("ntpp", big_and([A, B, WALL, t0])))),
        box_u(Implies(Box("tppi", Diamond("po", A)),
                      big_and([Not(A), Box("tpp", Not(A)), Box("ntpp", Not(A))]))),
    ]


def phi_d_recurring(system: DominoSystem) -> Formula:
    """φ_D extended by the recurring-tile and limit-region conjuncts"""
    return And(phi_d(system), big_and(recurring_groups(system)))


def chi_d_fin(system: DominoSystem, guarded: bool = True) -> List[Formula]:
    """
    Conjunct groups of χ for finite triangle tilings

    The groups of chi_d without the two that demand a successor for every
    a∧b region (the a∧¬b step and the c step), followed by three groups
    about the end of the chain: the first tile with no right neighbour is
    on the floor, tiles after it have none either, and the last tile is on
    the wall with nothing stacked above it.

    Args:
        system: Domino system
        guarded: Make the groups that demand a next, right or upper
            neighbour conditional on that neighbour existing. The unguarded
            groups have no finite model.
    """
    groups = chi_d(system)
    if guarded:
        has_next, has_right, has_up = _next(TOP), _right(TOP), _up(TOP)
        groups[9] = Implies(And(WALL, has_next), _next(FLOOR))
        groups[10] = Implies(And(WALL, has_up), _up(WALL))
        groups[12] = Implies(And(AB, has_right), _right(Not(WALL)))
        groups[15] = Implies(And(AB, has_right), _matching(system, system.h, _right))
        groups[16] = Implies(And(AB, has_up), _matching(system, system.v, _up))
    shared = [g for i, g in enumerate(groups) if i not in (1, 5)]
    no_right = And(AB, Not(_right(TOP)))
    return shared + [
        Implies(And(no_right, Box("ntppi", Implies(AB, _right(TOP)))), FLOOR),
        Implies(no_right, Or(Not(_next(TOP)), _next(Not(_right(TOP))))),
        Implies(And(AB, Not(_next(TOP))), And(WALL, Box("ntpp", Not(AB)))),
    ]


def phi_d_fin(system: DominoSystem, guarded: bool = True) -> Formula:
    """
    a ∧ b ∧ wall ∧ floor ∧ s0 ∧ [ntppi]¬a ∧ □_u χ ∧ (f0 ∨ <ntpp>(a ∧ b ∧ f0))

    Raises:
        MissingTileError: The system lacks s0 or f0
    """
    if system.s0 is None:
        raise MissingTileError("s0")
    if system.f0 is None:
        raise MissingTileError("f0")
    f0 = _tile(system, system.f0)
    groups = chi_d_fin(system, guarded)
    LOGGER.debug("finite reduction formula with %d groups over %d tiles", len(groups), len(system.tiles))
    return big_and([
        A, B, WALL, FLOOR, _tile(system, system.s0), Box("ntppi", Not(A)),
        box_u(big_and(groups)),
        Or(f0, Diamond("ntpp", big_and([A, B, f0]))),
    ])
