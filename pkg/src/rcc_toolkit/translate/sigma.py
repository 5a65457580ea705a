"""
Two-variable first-order formulas back into the modal language

Inside ∃y χ(x, y) the subformulas of χ that only speak about x are
pulled out by guessing their truth values, the relation between x and y
is guessed, and every binary atom is replaced by the constant the guess
decides. The result can be exponentially larger than the input.
"""

import itertools
import logging
from typing import List, Union

from ..algebra.relations import Kind
from ..errors import FreeVariableError
from ..logic.formula import BOTTOM, TOP, And, Bottom, Diamond, Formula, Not, Top, Var, diamond_u
from .fo2 import Equal, Exists, FAnd, FNot, FO2Formula, Pred, Rel, Truth, free_variables, other

LOGGER = logging.getLogger(__name__)


def _and(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Bottom) or isinstance(right, Bottom):
        return BOTTOM
    if isinstance(left, Top):
        return right
    if isinstance(right, Top):
        return left
    return And(left, right)


def _not(phi: Formula) -> Formula:
    if isinstance(phi, Top):
        return BOTTOM
    if isinstance(phi, Bottom):
        return TOP
    if isinstance(phi, Not):
        return phi.arg
    return Not(phi)


def _or(items: List[Formula]) -> Formula:
    result: Formula = BOTTOM
    for item in items:
        if isinstance(item, Top):
            return TOP
        if isinstance(item, Bottom):
            continue
        result = item if isinstance(result, Bottom) else _not(_and(_not(result), _not(item)))
    return result


def _diamond(relation: str, phi: Formula) -> Formula:
    return BOTTOM if isinstance(phi, Bottom) else Diamond(relation, phi)


def fo2_to_modal(phi: FO2Formula, kind: Union[Kind, str] = Kind.RCC8) -> Formula:
    """
    Modal formula true at a region s exactly when φ holds with x = s

    Args:
        phi: Formula in ∃/∧/¬ form whose only free variable is x
        kind: Relation vocabulary; the relation guess ranges over it

    Returns:
        The translation, with constants folded
    """
    kind = Kind.parse(kind)
    extra = free_variables(phi) - {"x"}
    if extra:
        raise FreeVariableError(f"free variable(s) other than x: {', '.join(sorted(extra))}")
    return _sigma(phi, "x", kind)


def _sigma(phi: FO2Formula, v: str, kind: Kind) -> Formula:
    """Translation of a formula whose free variables are among {v}"""
    if isinstance(phi, Truth):
        return TOP if phi.value else BOTTOM
    if isinstance(phi, Pred):
        return Var(phi.name)
    if isinstance(phi, Rel):
        # r(v, v)
        return TOP if phi.relation == kind.identity.value else BOTTOM
    if isinstance(phi, Equal):
        return TOP
    if isinstance(phi, FNot):
        return _not(_sigma(phi.arg, v, kind))
    if isinstance(phi, FAnd):
        return _and(_sigma(phi.left, v, kind), _sigma(phi.right, v, kind))
    if isinstance(phi, Exists):
        if phi.var == v:
            # rebinding the free variable: the body speaks about one region only
            return diamond_u(_sigma(phi.arg, v, kind))
        return _exists_other(phi.arg, v, kind)
    raise TypeError(f"not a first-order formula: {phi!r}")


def _split(chi: FO2Formula, v: str, gammas: List[FO2Formula], xis: List[FO2Formula]) -> None:
    """Collect the maximal subformulas about v alone (γ) and about the other variable alone (ξ)"""
    w = other(v)
    if isinstance(chi, Truth):
        return
    free = free_variables(chi)
    if free <= {v}:
        if chi not in gammas:
            gammas.append(chi)
        return
    if free == {w}:
        if chi not in xis:
            xis.append(chi)
        return
    if isinstance(chi, FNot):
        _split(chi.arg, v, gammas, xis)
    elif isinstance(chi, FAnd):
        _split(chi.left, v, gammas, xis)
        _split(chi.right, v, gammas, xis)
    elif not isinstance(chi, (Rel, Equal)):
        raise TypeError(f"unexpected subformula {chi!r}")


def _binary_value(atom: FO2Formula, v: str, relation: str, kind: Kind) -> bool:
    """Value of a binary atom when rel(v, w) is the guessed relation"""
    if isinstance(atom, Equal):
        return relation == kind.identity.value
    if atom.left == v:
        return atom.relation == relation
    converse = next(r for r in kind.relations if r.value == atom.relation).converse()
    return converse.value == relation


def _substitute(chi: FO2Formula, v: str, relation: str, kind: Kind,
                gamma_values: dict, xi_values: dict) -> Formula:
    if isinstance(chi, Truth):
        return TOP if chi.value else BOTTOM
    if chi in gamma_values:
        return gamma_values[chi]
    if chi in xi_values:
        return xi_values[chi]
    if isinstance(chi, FNot):
        return _not(_substitute(chi.arg, v, relation, kind, gamma_values, xi_values))
    if isinstance(chi, FAnd):
        left = _substitute(chi.left, v, relation, kind, gamma_values, xi_values)
        if isinstance(left, Bottom):
            return BOTTOM
        return _and(left, _substitute(chi.right, v, relation, kind, gamma_values, xi_values))
    return TOP if _binary_value(chi, v, relation, kind) else BOTTOM


def _exists_other(chi: FO2Formula, v: str, kind: Kind) -> Formula:
    w = other(v)
    gammas: List[FO2Formula] = []
    xis: List[FO2Formula] = []
    _split(chi, v, gammas, xis)
    gamma_sigma = [_sigma(g, v, kind) for g in gammas]
    xi_values = {xi: _sigma(xi, w, kind) for xi in xis}
    LOGGER.debug("existential case: %d guessed subformulas, %d inner subformulas", len(gammas), len(xis))

    disjuncts = []
    for bits in itertools.product((True, False), repeat=len(gammas)):
        guard: Formula = TOP
        for translated, bit in zip(gamma_sigma, bits):
            guard = _and(guard, translated if bit else _not(translated))
        if isinstance(guard, Bottom):
            continue
        gamma_values = {g: (TOP if bit else BOTTOM) for g, bit in zip(gammas, bits)}
        guesses = [
            _diamond(r.value, _substitute(chi, v, r.value, kind, gamma_values, xi_values))
            for r in kind.relations
        ]
        disjuncts.append(_and(guard, _or(guesses)))
    return _or(disjuncts)
