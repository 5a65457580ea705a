"""
Surface syntax of modal formulas

Grammar (ASCII):

    formula  := iff
    iff      := implies ("<->" implies)*
    implies  := or ("->" implies)?
    or       := and ("|" and)*
    and      := unary ("&" unary)*
    unary    := ("!" | "[" m "]" | "<" m ">") unary | atom
    atom     := "true" | "false" | "nom(" formula ")" | var | "(" formula ")"

Modality names depend on the mode (rcc8, rcc5 or s53).
"""

from functools import lru_cache
from typing import List, Union

import pyparsing as pp

from ..errors import FormulaSyntaxError
from .formula import (
    BOTTOM,
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
    modalities,
)

pp.ParserElement.enable_packrat()

_KEYWORDS = ("true", "false", "nom")


def _fold_left(cls):
    def action(tokens):
        items = tokens[0]
        result = items[0]
        for k in range(2, len(items), 2):
            result = cls(result, items[k])
        return result
    return action


def _fold_right(cls):
    def action(tokens):
        items = tokens[0]
        result = items[-1]
        for k in range(len(items) - 3, -1, -2):
            result = cls(items[k], result)
        return result
    return action


def _prefix(tokens):
    operator, operand = tokens[0][0], tokens[0][1]
    if operator == "!":
        return Not(operand)
    kind, name = operator
    return Box(name, operand) if kind == "[" else Diamond(name, operand)


@lru_cache(maxsize=None)
def _grammar(mode: Mode) -> pp.ParserElement:
    allowed = set(modalities(mode))

    def check_modality(s, loc, tokens):
        if tokens[0] not in allowed:
            raise pp.ParseFatalException(s, loc, f"unknown modality {tokens[0]!r} in {mode.value} mode")

    modality = pp.Regex(r"[a-z0-9_]+").set_parse_action(check_modality)
    box_op = pp.Group(pp.Literal("[") + modality + pp.Suppress("]"))
    diamond_op = pp.Group(pp.Literal("<") + modality + pp.Suppress(">"))
    prefix_op = pp.Literal("!") | box_op | diamond_op

    keyword = pp.MatchFirst([pp.Keyword(k) for k in _KEYWORDS])
    variable = (~keyword + pp.Regex(r"[a-z][a-zA-Z0-9_]*")).set_parse_action(lambda t: Var(t[0]))
    formula = pp.Forward()
    true_ = pp.Keyword("true").set_parse_action(lambda: TOP)
    false_ = pp.Keyword("false").set_parse_action(lambda: BOTTOM)
    nom = (pp.Suppress(pp.Keyword("nom")) + pp.Suppress("(") + formula + pp.Suppress(")")).set_parse_action(
        lambda t: Nom(t[0]))
    operand = true_ | false_ | nom | variable

    formula <<= pp.infix_notation(operand, [
        (prefix_op, 1, pp.OpAssoc.RIGHT, _prefix),
        (pp.Literal("&"), 2, pp.OpAssoc.LEFT, _fold_left(And)),
        (pp.Literal("|"), 2, pp.OpAssoc.LEFT, _fold_left(Or)),
        (pp.Literal("->"), 2, pp.OpAssoc.RIGHT, _fold_right(Implies)),
        (pp.Literal("<->"), 2, pp.OpAssoc.LEFT, _fold_left(Iff)),
    ])
    return formula


def parse(text: str, mode: Union[Mode, str] = Mode.RCC8) -> Formula:
    """
    Parse formula text

    Args:
        text: Formula in the surface grammar
        mode: rcc8, rcc5 or s53; decides which modality names exist and
            whether "pp" is a relation or a defined modality

    Returns:
        The formula AST
    """
    mode = Mode.parse(mode)
    try:
        result = _grammar(mode).parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise FormulaSyntaxError(e.msg, position=e.loc, line=e.lineno, column=e.col)
    return result[0]


_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_UNARY = 5


def _precedence(phi: Formula) -> int:
    return _PRECEDENCE.get(type(phi), _UNARY)


def format_formula(phi: Formula) -> str:
    """Print a formula with the minimal parentheses the grammar needs"""
    parts: List[str] = []
    _emit(phi, parts)
    return "".join(parts)


def _emit(phi: Formula, out: List[str]) -> None:
    if isinstance(phi, Var):
        out.append(phi.name)
    elif isinstance(phi, Top):
        out.append("true")
    elif isinstance(phi, Bottom):
        out.append("false")
    elif isinstance(phi, Nom):
        out.append("nom(")
        _emit(phi.arg, out)
        out.append(")")
    elif isinstance(phi, (Not, Box, Diamond)):
        if isinstance(phi, Not):
            out.append("!")
        elif isinstance(phi, Box):
            out.append(f"[{phi.modality}]")
        else:
            out.append(f"<{phi.modality}>")
        _emit_child(phi.arg, _UNARY, out)
    else:
        own = _PRECEDENCE[type(phi)]
        # -> groups to the right, the other binary operators to the left
        left_min, right_min = (own + 1, own) if isinstance(phi, Implies) else (own, own + 1)
        _emit_child(phi.left, left_min, out)
        out.append(f" {_SYMBOL[type(phi)]} ")
        _emit_child(phi.right, right_min, out)


def _emit_child(phi: Formula, minimum: int, out: List[str]) -> None:
    if _precedence(phi) < minimum:
        out.append("(")
        _emit(phi, out)
        out.append(")")
    else:
        _emit(phi, out)
