"""
Region formulas as first-order formulas over a dense order

A box [a1, a2] × ... is the coordinate tuple (a1, a2, ...); the atoms
are the order <, the 2n-ary predicate 'exists' (the tuple is a region of
the model) and one 2n-ary predicate per propositional variable.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.relations import BaseRelation8, Kind
from ..errors import DimensionMismatchError
from ..geometry.intervals import IntervalUnion, rel_intervals
from ..geometry.rects import HyperRect, rel_rects
from ..logic.formula import And, Box, Formula, Mode, Not, Top, Var
from ..logic.semantics import expand
from ..structures.region_structure import Valuation

LOGGER = logging.getLogger(__name__)

EXISTS = "exists"


class FL4Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return fl4_to_sexpr(self)


@dataclass(frozen=True)
class Less(FL4Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Same(FL4Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Atom(FL4Formula):
    """P(x1, ..., x2n) for a variable predicate or 'exists'"""

    predicate: str
    args: Tuple[str, ...]


@dataclass(frozen=True)
class LNot(FL4Formula):
    arg: FL4Formula


@dataclass(frozen=True)
class LAnd(FL4Formula):
    left: FL4Formula
    right: FL4Formula


@dataclass(frozen=True)
class LExists(FL4Formula):
    vars: Tuple[str, ...]
    arg: FL4Formula


@dataclass(frozen=True)
class LTrue(FL4Formula):
    pass


def l_and(*items: FL4Formula) -> FL4Formula:
    result: Optional[FL4Formula] = None
    for item in items:
        result = item if result is None else LAnd(result, item)
    return result if result is not None else LTrue()


def l_not(phi: FL4Formula) -> FL4Formula:
    return phi.arg if isinstance(phi, LNot) else LNot(phi)


def l_or(*items: FL4Formula) -> FL4Formula:
    return l_not(l_and(*(l_not(i) for i in items)))


def leq(a: str, b: str) -> FL4Formula:
    return l_not(Less(b, a))


def coordinates(prefix: str, n: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(2 * n))


def rect(xs: Sequence[str]) -> FL4Formula:
    """Every side is a non-degenerate interval"""
    return l_and(*(Less(xs[2 * d], xs[2 * d + 1]) for d in range(len(xs) // 2)))


def _dims(xs: Sequence[str], ys: Sequence[str]):
    if len(xs) != len(ys) or len(xs) % 2:
        raise DimensionMismatchError("coordinate tuples of different dimension")
    for d in range(len(xs) // 2):
        yield xs[2 * d], xs[2 * d + 1], ys[2 * d], ys[2 * d + 1]


def _meet(xs, ys) -> FL4Formula:
    return l_and(*(l_and(leq(a1, b2), leq(b1, a2)) for a1, a2, b1, b2 in _dims(xs, ys)))


def _interiors_meet(xs, ys) -> FL4Formula:
    return l_and(*(l_and(Less(a1, b2), Less(b1, a2)) for a1, a2, b1, b2 in _dims(xs, ys)))


def _inside(xs, ys) -> FL4Formula:
    return l_and(*(l_and(leq(b1, a1), leq(a2, b2)) for a1, a2, b1, b2 in _dims(xs, ys)))


def _inside_interior(xs, ys) -> FL4Formula:
    return l_and(*(l_and(Less(b1, a1), Less(a2, b2)) for a1, a2, b1, b2 in _dims(xs, ys)))


def order_formula(relation: Union[BaseRelation8, str], n: int,
                  xs: Optional[Sequence[str]] = None, ys: Optional[Sequence[str]] = None) -> FL4Formula:
    """
    Order formula saying that box xs stands in the relation to box ys

    Per dimension, closed boxes meet when a1 <= b2 and b1 <= a2, their
    interiors meet with strict inequalities, and xs lies inside ys (or
    inside its interior) when b1 <= a1 and a2 <= b2 (strictly).
    """
    if isinstance(relation, str):
        relation = BaseRelation8(relation)
    xs = tuple(xs) if xs is not None else coordinates("x", n)
    ys = tuple(ys) if ys is not None else coordinates("y", n)
    meet, imeet = _meet(xs, ys), _interiors_meet(xs, ys)
    s_in_t, t_in_s = _inside(xs, ys), _inside(ys, xs)
    R = BaseRelation8
    if relation is R.DC:
        return l_not(meet)
    if relation is R.EC:
        return l_and(meet, l_not(imeet))
    if relation is R.PO:
        return l_and(imeet, l_not(s_in_t), l_not(t_in_s))
    if relation is R.EQ:
        return l_and(*(Same(a, b) for a, b in zip(xs, ys)))
    if relation is R.TPP:
        return l_and(s_in_t, l_not(t_in_s), l_not(_inside_interior(xs, ys)))
    if relation is R.NTPP:
        return _inside_interior(xs, ys)
    if relation is R.TPPI:
        return l_and(t_in_s, l_not(s_in_t), l_not(_inside_interior(ys, xs)))
    return _inside_interior(ys, xs)


def _guard(xs: Tuple[str, ...]) -> FL4Formula:
    return l_and(rect(xs), Atom(EXISTS, xs))


def modal_to_fl4(phi: Formula, n: int = 2, closed: bool = True) -> FL4Formula:
    """
    Translate an RCC8 formula for boxes in n dimensions

    Args:
        phi: RCC8 formula; macros are expanded first
        n: 1 (intervals) or 2 (rectangles)
        closed: Return ∀x̄(rect(x̄) ∧ exists(x̄) → φ^s) instead of φ^s

    Returns:
        The translation; the open form has the free tuple x1..x2n
    """
    if n not in (1, 2):
        raise ValueError(f"unsupported dimension n={n}; expected 1 or 2")
    core = expand(phi, Mode.RCC8)
    xs, ys = coordinates("x", n), coordinates("y", n)
    body = _s(core, xs, ys)
    if not closed:
        return body
    return l_not(LExists(xs, l_and(_guard(xs), l_not(body))))


def _s(phi: Formula, xs: Tuple[str, ...], ys: Tuple[str, ...]) -> FL4Formula:
    if isinstance(phi, Var):
        return l_and(_guard(xs), Atom(phi.name, xs))
    if isinstance(phi, Top):
        return _guard(xs)
    if isinstance(phi, Not):
        return l_and(_guard(xs), LNot(_s(phi.arg, xs, ys)))
    if isinstance(phi, And):
        return LAnd(_s(phi.left, xs, ys), _s(phi.right, xs, ys))
    if isinstance(phi, Box):
        # [r]ψ = ¬<r>¬ψ
        inner = l_and(_guard(ys), LNot(_s(phi.arg, ys, xs)))
        diamond = l_and(_guard(xs), LExists(ys, LAnd(order_formula(phi.modality, len(xs) // 2, xs, ys), inner)))
        return l_and(_guard(xs), LNot(diamond))
    raise TypeError(f"not a core formula: {phi!r}")


def fl4_size(phi: FL4Formula) -> int:
    if isinstance(phi, LNot):
        return 1 + fl4_size(phi.arg)
    if isinstance(phi, LAnd):
        return 1 + fl4_size(phi.left) + fl4_size(phi.right)
    if isinstance(phi, LExists):
        return 1 + fl4_size(phi.arg)
    return 1


BoxRegion = Union[HyperRect, IntervalUnion]


def _as_tuple(region: BoxRegion) -> Tuple[Fraction, ...]:
    if isinstance(region, IntervalUnion):
        if len(region.intervals) != 1:
            raise ValueError(f"{region!r} is not a single interval")
        sides = region.intervals
    elif isinstance(region, HyperRect):
        sides = region.sides
    else:
        raise TypeError(f"not a box: {region!r}")
    return tuple(c for side in sides for c in side)


class FL4Model:
    """
    Finite first-order model read off a list of boxes

    The order is the rationals restricted to the endpoint set, 'exists'
    holds of exactly the tuples of the given boxes and the variable
    predicates follow the valuation.
    """

    def __init__(self, regions: Sequence[BoxRegion], ids: Optional[Sequence[str]] = None,
                 valuation: Optional[Valuation] = None):
        self.tuples = [_as_tuple(r) for r in regions]
        widths = {len(t) for t in self.tuples}
        if len(widths) > 1:
            raise DimensionMismatchError("boxes of different dimension in one model")
        self.width = widths.pop() if widths else 0
        self.ids = list(ids) if ids is not None else [f"r{i + 1}" for i in range(len(self.tuples))]
        self.points = sorted({c for t in self.tuples for c in t})
        valuation = valuation or Valuation()
        self.predicates: Dict[str, set] = {}
        for name in valuation.variables():
            self.predicates[name] = {self.tuples[self.ids.index(r)] for r in valuation.extension(name)
                                     if r in self.ids}
        self.predicates[EXISTS] = set(self.tuples)


def _conjuncts(phi: FL4Formula) -> List[FL4Formula]:
    if isinstance(phi, LAnd):
        return _conjuncts(phi.left) + _conjuncts(phi.right)
    return [phi]


def eval_fl4(model: FL4Model, phi: FL4Formula, assignment: Optional[Union[str, Mapping[str, Fraction]]] = None) -> bool:
    """
    Evaluate over the finite model

    A quantifier whose body has exists(ȳ) as a top-level conjunct only
    ranges over the model's boxes, which is exact; other quantifiers range
    over all endpoint tuples.

    Args:
        model: FL4Model
        phi: Formula
        assignment: Region id for the free tuple x1..x2n, or an explicit
            map from coordinate variables to values
    """
    env: Dict[str, Fraction] = {}
    if isinstance(assignment, str):
        box = model.tuples[model.ids.index(assignment)]
        env.update({f"x{i + 1}": c for i, c in enumerate(box)})
    elif assignment:
        env.update(assignment)
    return _eval(model, phi, env)


def _eval(model: FL4Model, phi: FL4Formula, env: Dict[str, Fraction]) -> bool:
    if isinstance(phi, LTrue):
        return True
    if isinstance(phi, Less):
        return env[phi.left] < env[phi.right]
    if isinstance(phi, Same):
        return env[phi.left] == env[phi.right]
    if isinstance(phi, Atom):
        return tuple(env[a] for a in phi.args) in model.predicates.get(phi.predicate, ())
    if isinstance(phi, LNot):
        return not _eval(model, phi.arg, env)
    if isinstance(phi, LAnd):
        return _eval(model, phi.left, env) and _eval(model, phi.right, env)
    if isinstance(phi, LExists):
        guarded = any(isinstance(c, Atom) and c.predicate == EXISTS and c.args == phi.vars
                      for c in _conjuncts(phi.arg))
        candidates = model.tuples if guarded else itertools.product(model.points, repeat=len(phi.vars))
        saved = {v: env.get(v) for v in phi.vars}
        try:
            for values in candidates:
                env.update(zip(phi.vars, values))
                if _eval(model, phi.arg, env):
                    return True
            return False
        finally:
            for v, value in saved.items():
                if value is None:
                    env.pop(v, None)
                else:
                    env[v] = value
    raise TypeError(f"not an FL4 formula: {phi!r}")


def _grid_boxes(n: int, grid: int) -> List[BoxRegion]:
    sides = [(a, b) for a in range(grid + 1) for b in range(a + 1, grid + 1)]
    if n == 1:
        return [IntervalUnion.single(a, b) for a, b in sides]
    return [HyperRect(combo) for combo in itertools.product(sides, repeat=n)]


def check_order_formulas(n: int, grid: int = 4) -> List[str]:
    """
    Compare every order formula with the geometry on all grid boxes

    Returns:
        One line per disagreement; empty when all formulas are exact
    """
    if n not in (1, 2):
        raise ValueError(f"unsupported dimension n={n}")
    xs, ys = coordinates("x", n), coordinates("y", n)
    formulas = {r: order_formula(r, n, xs, ys) for r in Kind.RCC8.relations}
    empty = FL4Model([])
    mismatches = []
    boxes = _grid_boxes(n, grid)
    for s in boxes:
        for t in boxes:
            expected = rel_intervals(s, t) if n == 1 else rel_rects(s, t)
            env = dict(zip(xs, _as_tuple(s)))
            env.update(zip(ys, _as_tuple(t)))
            for r, formula in formulas.items():
                if _eval(empty, formula, env) != (r is expected):
                    mismatches.append(f"{r.value}: {s!r} vs {t!r} (geometry says {expected.value})")
    LOGGER.debug("order formulas n=%d: %d box pairs, %d mismatches", n, len(boxes) ** 2, len(mismatches))
    return mismatches



def fl4_to_sexpr(phi: FL4Formula) -> str:
    """Print as (exists (y1 y2) (and (< x1 y2) (exists y1 y2)))"""
    if isinstance(phi, LTrue):
        return "true"
    if isinstance(phi, Less):
        return f"(< {phi.left} {phi.right})"
    if isinstance(phi, Same):
        return f"(= {phi.left} {phi.right})"
    if isinstance(phi, Atom):
        return f"({phi.predicate} {' '.join(phi.args)})"
    if isinstance(phi, LNot):
        return f"(not {fl4_to_sexpr(phi.arg)})"
    if isinstance(phi, LAnd):
        return f"(and {fl4_to_sexpr(phi.left)} {fl4_to_sexpr(phi.right)})"
    if isinstance(phi, LExists):
        return f"(exists ({' '.join(phi.vars)}) {fl4_to_sexpr(phi.arg)})"
    raise TypeError(f"not an FL4 formula: {phi!r}")
