"""
Two-variable first-order logic over the region vocabulary

Formulas use the variables x and y only and are kept in ∃/∧/¬ form;
the derived connectives are constructor functions.
"""

import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Union

import pyparsing as pp

from ..algebra.relations import Kind
from ..errors import FormulaSyntaxError, FreeVariableError
from ..logic.formula import And, Box, Formula, Mode, Not, Top, Var
from ..logic.semantics import expand
from ..structures.region_structure import RegionStructure, Valuation

VARIABLES = ("x", "y")


def other(v: str) -> str:
    return "y" if v == "x" else "x"


class FO2Formula:
    """Base class of first-order formula nodes"""

    __slots__ = ()

    def __str__(self) -> str:
        return to_sexpr(self)


@dataclass(frozen=True)
class Truth(FO2Formula):
    value: bool


@dataclass(frozen=True)
class Pred(FO2Formula):
    """Unary atom p(v)"""

    name: str
    var: str


@dataclass(frozen=True)
class Rel(FO2Formula):
    """Binary atom r(v, w)"""

    relation: str
    left: str
    right: str


@dataclass(frozen=True)
class Equal(FO2Formula):
    left: str
    right: str


@dataclass(frozen=True)
class FNot(FO2Formula):
    arg: FO2Formula


@dataclass(frozen=True)
class FAnd(FO2Formula):
    left: FO2Formula
    right: FO2Formula


@dataclass(frozen=True)
class Exists(FO2Formula):
    var: str
    arg: FO2Formula


TRUE = Truth(True)
FALSE = Truth(False)


def f_not(phi: FO2Formula) -> FO2Formula:
    """Negation with double negations and constants folded"""
    if isinstance(phi, FNot):
        return phi.arg
    if isinstance(phi, Truth):
        return Truth(not phi.value)
    return FNot(phi)


def f_and(*items: FO2Formula) -> FO2Formula:
    result: Optional[FO2Formula] = None
    for item in items:
        result = item if result is None else FAnd(result, item)
    return result if result is not None else TRUE


def f_or(*items: FO2Formula) -> FO2Formula:
    return f_not(f_and(*(f_not(i) for i in items)))


def f_implies(left: FO2Formula, right: FO2Formula) -> FO2Formula:
    return f_not(FAnd(left, f_not(right)))


def f_iff(left: FO2Formula, right: FO2Formula) -> FO2Formula:
    return FAnd(f_implies(left, right), f_implies(right, left))


def forall(var: str, phi: FO2Formula) -> FO2Formula:
    return f_not(Exists(var, f_not(phi)))


def free_variables(phi: FO2Formula) -> FrozenSet[str]:
    if isinstance(phi, Truth):
        return frozenset()
    if isinstance(phi, Pred):
        return frozenset([phi.var])
    if isinstance(phi, (Rel, Equal)):
        return frozenset([phi.left, phi.right])
    if isinstance(phi, FNot):
        return free_variables(phi.arg)
    if isinstance(phi, FAnd):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, Exists):
        return free_variables(phi.arg) - {phi.var}
    raise TypeError(f"not a first-order formula: {phi!r}")


def fo_size(phi: FO2Formula) -> int:
    if isinstance(phi, FNot):
        return 1 + fo_size(phi.arg)
    if isinstance(phi, FAnd):
        return 1 + fo_size(phi.left) + fo_size(phi.right)
    if isinstance(phi, Exists):
        return 1 + fo_size(phi.arg)
    return 1


def quantifier_depth(phi: FO2Formula) -> int:
    if isinstance(phi, FNot):
        return quantifier_depth(phi.arg)
    if isinstance(phi, FAnd):
        return max(quantifier_depth(phi.left), quantifier_depth(phi.right))
    if isinstance(phi, Exists):
        return 1 + quantifier_depth(phi.arg)
    return 0


# s-expressions

def to_sexpr(phi: FO2Formula) -> str:
    """Print as (exists y (and (ec x y) (p y)))"""
    if isinstance(phi, Truth):
        return "true" if phi.value else "false"
    if isinstance(phi, Pred):
        return f"({phi.name} {phi.var})"
    if isinstance(phi, Rel):
        return f"({phi.relation} {phi.left} {phi.right})"
    if isinstance(phi, Equal):
        return f"(= {phi.left} {phi.right})"
    if isinstance(phi, FNot):
        return f"(not {to_sexpr(phi.arg)})"
    if isinstance(phi, FAnd):
        return f"(and {to_sexpr(phi.left)} {to_sexpr(phi.right)})"
    if isinstance(phi, Exists):
        return f"(exists {phi.var} {to_sexpr(phi.arg)})"
    raise TypeError(f"not a first-order formula: {phi!r}")


_SEXPR = pp.nested_expr("(", ")", content=pp.Word(pp.alphanums + "_=<>-"))


def _variable(token) -> str:
    if token not in VARIABLES:
        raise FormulaSyntaxError(f"expected x or y, found {token!r}")
    return token


def _build(node, relations: FrozenSet[str]) -> FO2Formula:
    if isinstance(node, str):
        if node == "true":
            return TRUE
        if node == "false":
            return FALSE
        raise FormulaSyntaxError(f"unexpected atom {node!r}")
    items = list(node)
    if not items or not isinstance(items[0], str):
        raise FormulaSyntaxError(f"malformed expression {node!r}")
    head, args = items[0], items[1:]
    if head in ("exists", "forall"):
        if len(args) != 2:
            raise FormulaSyntaxError(f"{head} takes a variable and a body")
        var, body = _variable(args[0]), _build(args[1], relations)
        return Exists(var, body) if head == "exists" else forall(var, body)
    if head == "not":
        if len(args) != 1:
            raise FormulaSyntaxError("not takes one argument")
        return f_not(_build(args[0], relations))
    if head in ("and", "or"):
        parts = [_build(a, relations) for a in args]
        return f_and(*parts) if head == "and" else f_or(*parts)
    if head in ("implies", "iff"):
        if len(args) != 2:
            raise FormulaSyntaxError(f"{head} takes two arguments")
        left, right = _build(args[0], relations), _build(args[1], relations)
        return f_implies(left, right) if head == "implies" else f_iff(left, right)
    if head == "=":
        return Equal(_variable(args[0]), _variable(args[1]))
    if len(args) == 2 and head in relations:
        return Rel(head, _variable(args[0]), _variable(args[1]))
    if len(args) == 1:
        return Pred(head, _variable(args[0]))
    raise FormulaSyntaxError(f"unknown atom ({head} ...)")


def parse_sexpr(text: str, kind: Union[Kind, str] = Kind.RCC8) -> FO2Formula:
    """Parse the s-expression form printed by to_sexpr"""
    relations = frozenset(r.value for r in Kind.parse(kind).relations)
    text = text.strip()
    if text in ("true", "false"):
        return _build(text, relations)
    try:
        tree = _SEXPR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise FormulaSyntaxError(e.msg, position=e.loc, line=e.lineno, column=e.col)
    return _build(tree[0], relations)


# evaluation

class FOChecker:
    """
    Satisfying (x, y) assignments of a formula, as a bitmask over pairs

    Bit i*n + j stands for x = region i, y = region j. Given per-region
    predicate blocks of width w, the checker evaluates w valuations at
    once and bit (i*n + j)*w + v stands for the pair under valuation v.
    """

    def __init__(self, structure: RegionStructure, valuation: Optional[Valuation] = None,
                 blocks: Optional[Mapping[str, Sequence[int]]] = None, width: int = 1):
        self.structure = structure
        self.n = structure.size
        self.width = width
        self.ones = (1 << width) - 1
        self.full = (1 << (self.n * self.n * width)) - 1
        if blocks is None:
            valuation = valuation or Valuation()
            blocks = {
                name: [int(r in ids) for r in structure.regions]
                for name, ids in ((name, set(valuation.extension(name))) for name in valuation.assignment)
            }
        self.blocks = blocks
        self._memo: Dict[int, tuple] = {}

    def _shift(self, i: int, j: int) -> int:
        return (i * self.n + j) * self.width

    def pairs(self, phi: FO2Formula) -> int:
        hit = self._memo.get(id(phi))
        if hit is not None and hit[0] is phi:
            return hit[1]
        result = self._compute(phi)
        self._memo[id(phi)] = (phi, result)
        return result

    def _compute(self, phi: FO2Formula) -> int:
        n, ones = self.n, self.ones
        everything = [(i, j) for i in range(n) for j in range(n)]
        if isinstance(phi, Truth):
            return self.full if phi.value else 0
        if isinstance(phi, Pred):
            blocks = self.blocks.get(phi.name)
            if blocks is None:
                return 0
            pick = 0 if phi.var == "x" else 1
            return sum(blocks[(i, j)[pick]] << self._shift(i, j) for i, j in everything)
        if isinstance(phi, Rel):
            mask = 0
            for i, j in everything:
                a = i if phi.left == "x" else j
                b = i if phi.right == "x" else j
                if self.structure.rel(a, b).value == phi.relation:
                    mask |= ones << self._shift(i, j)
            return mask
        if isinstance(phi, Equal):
            mask = 0
            for i, j in everything:
                a = i if phi.left == "x" else j
                b = i if phi.right == "x" else j
                if a == b:
                    mask |= ones << self._shift(i, j)
            return mask
        if isinstance(phi, FNot):
            return self.full & ~self.pairs(phi.arg)
        if isinstance(phi, FAnd):
            return self.pairs(phi.left) & self.pairs(phi.right)
        if isinstance(phi, Exists):
            inner = self.pairs(phi.arg)
            mask = 0
            for a in range(n):
                # a is the variable that stays free
                cells = [(a, b) if phi.var == "y" else (b, a) for b in range(n)]
                found = 0
                for i, j in cells:
                    found |= inner >> self._shift(i, j)
                found &= ones
                for i, j in cells:
                    mask |= found << self._shift(i, j)
            return mask
        raise TypeError(f"not a first-order formula: {phi!r}")


def eval_fo(structure: RegionStructure, valuation: Optional[Valuation],
            assignment: Mapping[str, str], phi: FO2Formula) -> bool:
    """
    Truth of φ under an assignment of its free variables to region ids

    Quantifiers range over the regions of the structure.
    """
    missing = free_variables(phi) - set(assignment)
    if missing:
        raise FreeVariableError(f"unassigned free variable(s): {', '.join(sorted(missing))}")
    i = structure.index(assignment["x"]) if "x" in assignment else 0
    j = structure.index(assignment["y"]) if "y" in assignment else 0
    return bool(FOChecker(structure, valuation).pairs(phi) >> (i * structure.size + j) & 1)


# standard translation

def modal_to_fo(phi: Formula, kind: Union[Kind, str] = Kind.RCC8, var: str = "x") -> FO2Formula:
    """
    Standard translation with free variable x, reusing x and y alternately

    Macros are expanded first; <r>ψ comes out as ∃y(r(x,y) ∧ ψ(y)).
    """
    return _st(expand(phi, Mode.parse(kind)), var)


def _st(phi: Formula, v: str) -> FO2Formula:
    if isinstance(phi, Var):
        return Pred(phi.name, v)
    if isinstance(phi, Top):
        return TRUE
    if isinstance(phi, Not):
        return f_not(_st(phi.arg, v))
    if isinstance(phi, And):
        return FAnd(_st(phi.left, v), _st(phi.right, v))
    if isinstance(phi, Box):
        w = other(v)
        return f_not(Exists(w, FAnd(Rel(phi.modality, v, w), f_not(_st(phi.arg, w)))))
    raise TypeError(f"not a core formula: {phi!r}")


def succinctness_formula(n: int) -> FO2Formula:
    """
    ∀x∀y(⋀_{i<n}(p_i(x) ↔ p_i(y)) → (p_n(x) ↔ p_n(y)))

    Predicates are named p0 .. pn.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    same = f_and(*(f_iff(Pred(f"p{i}", "x"), Pred(f"p{i}", "y")) for i in range(n)))
    body = f_implies(same, f_iff(Pred(f"p{n}", "x"), Pred(f"p{n}", "y")))
    return forall("x", forall("y", body))


def random_fo2(rng: random.Random, predicates: Sequence[str], depth: int = 3,
               kind: Union[Kind, str] = Kind.RCC8, free: str = "x") -> FO2Formula:
    """
    Random formula whose only free variable is x

    Args:
        rng: Random source
        predicates: Unary predicate names
        depth: Maximal quantifier depth
        kind: Relation vocabulary
        free: The free variable
    """
    relations = [r.value for r in Kind.parse(kind).relations]
    return _random(rng, list(predicates), relations, depth, frozenset([free]), 4)


def _random(rng: random.Random, predicates: List[str], relations: List[str],
            depth: int, scope: FrozenSet[str], budget: int) -> FO2Formula:
    bound = sorted(scope)
    if budget <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if len(bound) == 2 and roll < 0.4:
            left = rng.choice(bound)
            right = other(left) if rng.random() < 0.8 else left
            if rng.random() < 0.1:
                return Equal(left, right)
            return Rel(rng.choice(relations), left, right)
        if roll < 0.5 and rng.random() < 0.15:
            v = rng.choice(bound)
            return Rel(rng.choice(relations), v, v)
        return Pred(rng.choice(predicates), rng.choice(bound))
    pick = rng.random()
    if pick < 0.25:
        return f_not(_random(rng, predicates, relations, depth, scope, budget - 1))
    if pick < 0.6 or depth <= 0:
        return FAnd(_random(rng, predicates, relations, depth, scope, budget - 1),
                    _random(rng, predicates, relations, depth, scope, budget - 1))
    var = "y" if rng.random() < 0.75 else "x"
    body = _random(rng, predicates, relations, depth - 1, scope | {var}, budget - 1)
    return Exists(var, body)
