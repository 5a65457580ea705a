"""
Turing machines on a right-infinite tape and their domino systems

A run on the empty tape is laid out column by column in a triangle: each
column is a configuration with the left-most cell at the bottom.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from ..errors import NormalizationError
from .domino import DominoSystem

LOGGER = logging.getLogger(__name__)

MOVES = ("L", "R")
PAD = "$"

Transition = Tuple[str, str, str, str, str]


def active_tile(state: str, symbol: str, move: str) -> str:
    """Tile of the head cell: state, content, direction of the last move"""
    return f"{state}/{symbol}/{move}"


def trace_tile(state: str, symbol: str, move: str) -> str:
    """Tile of the previously active cell"""
    return f"{state}/{symbol}/{move}^"


@dataclass(frozen=True)
class TuringMachine:
    """
    Single-tape machine started on the empty tape

    Args:
        states: State names
        alphabet: Tape symbols, including the blank and the halting marker
        initial: Start state
        final: Halting state
        transitions: Tuples (q, σ, q', σ', move) with move in {L, R}
        blank: Blank symbol
        marker: Symbol written on the halting cell
    """

    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    initial: str
    final: str
    transitions: Tuple[Transition, ...]
    blank: str = "b"
    marker: str = "#"

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", tuple(tuple(t) for t in self.transitions))
        for name in (self.initial, self.final):
            if name not in self.states:
                raise ValueError(f"state {name!r} is not declared")
        for symbol in (self.blank, self.marker):
            if symbol not in self.alphabet:
                raise ValueError(f"symbol {symbol!r} is not in the alphabet")
        for t in self.transitions:
            if len(t) != 5:
                raise ValueError(f"transition {t!r} is not a 5-tuple")
            q, s, q2, s2, move = t
            if q not in self.states or q2 not in self.states:
                raise ValueError(f"transition {t!r} uses an undeclared state")
            if s not in self.alphabet or s2 not in self.alphabet:
                raise ValueError(f"transition {t!r} uses an undeclared symbol")
            if move not in MOVES:
                raise ValueError(f"transition {t!r} has move {move!r}, expected L or R")

    def normalization_failures(self) -> List[str]:
        """
        Names of the normal-form conditions the machine violates

        The checks are syntactic: the start state is never re-entered,
        the machine can only stop in the halting state, every step into
        the halting state goes right, the halting marker is written by
        some step, and the blank is never written.
        """
        failures = []
        if any(t[2] == self.initial for t in self.transitions):
            failures.append("initial_state_reentered")
        defined = {(t[0], t[1]) for t in self.transitions}
        stuck = [(q, s) for q in self.states if q != self.final for s in self.alphabet if (q, s) not in defined]
        if stuck or any(t[0] == self.final for t in self.transitions):
            failures.append("stops_outside_final")
        if any(t[2] == self.final and t[4] != "R" for t in self.transitions):
            failures.append("last_step_not_right")
        if not any(t[3] == self.marker for t in self.transitions):
            failures.append("marker_never_written")
        if any(t[3] == self.blank for t in self.transitions):
            failures.append("blank_written")
        return failures

    def to_dict(self) -> Dict:
        return {
            "states": list(self.states),
            "alphabet": list(self.alphabet),
            "initial": self.initial,
            "final": self.final,
            "blank": self.blank,
            "marker": self.marker,
            "transitions": [list(t) for t in self.transitions],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TuringMachine":
        try:
            return cls(
                states=tuple(data["states"]),
                alphabet=tuple(data["alphabet"]),
                initial=data["initial"],
                final=data["final"],
                transitions=tuple(tuple(t) for t in data["transitions"]),
                blank=data.get("blank", "b"),
                marker=data.get("marker", "#"),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed machine payload: {e}")


def tm_to_domino(machine: TuringMachine) -> DominoSystem:
    """
    Domino system whose triangle tilings encode halting runs

    Tiles are the tape symbols, the active tiles Q×Σ×{L,R}, their traces
    and the padding tile "$"; s0 is the start state on a blank having
    moved left, f0 the halting state on the marker having moved right.

    Raises:
        NormalizationError: The machine is not in normal form
    """
    failures = machine.normalization_failures()
    if failures:
        raise NormalizationError(failures)
    Q, S = machine.states, machine.alphabet
    blank, marker, qf = machine.blank, machine.marker, machine.final

    active = [active_tile(q, s, m) for q in Q for s in S for m in MOVES]
    traces = [trace_tile(q, s, m) for q in Q for s in S for m in MOVES]
    tiles = list(S) + active + traces + [PAD]
    if len(set(tiles)) != len(tiles):
        raise ValueError("tape symbols clash with generated tile names")

    h = {(s, s) for s in S}
    for q, s, q2, s2, move in machine.transitions:
        for m in MOVES:
            h.add((active_tile(q, s, m), trace_tile(q2, s2, move)))
    for s in S:
        for q in Q:
            for q2 in Q:
                for m in MOVES:
                    h.add((s, active_tile(q, s, m)))
                    for m2 in MOVES:
                        h.add((trace_tile(q, s, m), active_tile(q2, s, m2)))
            for m in MOVES:
                h.add((trace_tile(q, s, m), s))
                h.add((trace_tile(q, s, m), PAD))
        h.add((s, PAD))
    h.add((active_tile(qf, marker, "R"), PAD))
    h.add((PAD, PAD))

    v = {(s, s2) for s in S for s2 in S if s != blank or s2 == blank}
    for q in Q:
        for s in S:
            for s2 in S:
                v.add((s, active_tile(q, s2, "L")))
                v.add((active_tile(q, s2, "R"), s))
                v.add((trace_tile(q, s2, "L"), s))
                v.add((s, trace_tile(q, s2, "R")))
                v.add((active_tile(q, s, "L"), trace_tile(q, s2, "L")))
                v.add((trace_tile(q, s2, "R"), active_tile(q, s, "R")))
    v.add((PAD, PAD))

    system = DominoSystem(
        tiles=tuple(tiles),
        h=frozenset(h),
        v=frozenset(v),
        s0=active_tile(machine.initial, blank, "L"),
        f0=active_tile(qf, marker, "R"),
    )
    LOGGER.debug("machine with %d states and %d symbols -> %d tiles, |H|=%d, |V|=%d",
                 len(Q), len(S), len(tiles), len(h), len(v))
    return system
