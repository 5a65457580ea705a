"""
Domino systems, tilings and the tiling search
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..config import Config, get_config
from .grid import Position, square_positions, triangle_positions

LOGGER = logging.getLogger(__name__)

Pair = Tuple[str, str]


def _safe_name(tile: str) -> str:
    out = []
    for ch in tile:
        if ch.isascii() and (ch.isalnum() or ch == "_"):
            out.append(ch)
        else:
            out.append(f"_{ord(ch):x}_")
    return "".join(out)


@dataclass(frozen=True)
class DominoSystem:
    """
    Tile types with horizontal and vertical matching conditions

    Args:
        tiles: Tile names in a fixed order (the search tries them in this order)
        h: Pairs (t, t') allowed with t' to the right of t
        v: Pairs (t, t') allowed with t' above t
        s0: Tile required at the origin of triangle tilings
        f0: Tile that must occur somewhere in triangle tilings
        t0: Tile recurring on the wall
    """

    tiles: Tuple[str, ...]
    h: FrozenSet[Pair]
    v: FrozenSet[Pair]
    s0: Optional[str] = None
    f0: Optional[str] = None
    t0: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        object.__setattr__(self, "h", frozenset(tuple(p) for p in self.h))
        object.__setattr__(self, "v", frozenset(tuple(p) for p in self.v))
        if not self.tiles:
            raise ValueError("a domino system needs at least one tile")
        if len(set(self.tiles)) != len(self.tiles):
            raise ValueError(f"repeated tile in {list(self.tiles)}")
        known = set(self.tiles)
        for label, pairs in (("H", self.h), ("V", self.v)):
            for a, b in pairs:
                if a not in known or b not in known:
                    raise ValueError(f"{label} pair ({a}, {b}) uses an undeclared tile")
        for role in ("s0", "f0", "t0"):
            tile = getattr(self, role)
            if tile is not None and tile not in known:
                raise ValueError(f"distinguished tile {role}={tile!r} is not a tile")
        variables = [self.tile_variable(t) for t in self.tiles]
        if len(set(variables)) != len(variables):
            raise ValueError("tile names collide after conversion to variable names")

    def tile_variable(self, tile: str) -> str:
        """Propositional variable p_t marking regions tiled with t"""
        return "p_" + _safe_name(tile)

    def right_options(self) -> Dict[str, List[str]]:
        options = defaultdict(list)
        for t in self.tiles:
            for u in self.tiles:
                if (t, u) in self.h:
                    options[t].append(u)
        return options

    def up_options(self) -> Dict[str, List[str]]:
        options = defaultdict(list)
        for t in self.tiles:
            for u in self.tiles:
                if (t, u) in self.v:
                    options[t].append(u)
        return options

    def to_dict(self) -> Dict:
        return {
            "tiles": list(self.tiles),
            "h": sorted([list(p) for p in self.h]),
            "v": sorted([list(p) for p in self.v]),
            "s0": self.s0,
            "f0": self.f0,
            "t0": self.t0,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DominoSystem":
        try:
            return cls(
                tiles=tuple(str(t) for t in data["tiles"]),
                h=frozenset((str(a), str(b)) for a, b in data.get("h", [])),
                v=frozenset((str(a), str(b)) for a, b in data.get("v", [])),
                s0=data.get("s0"),
                f0=data.get("f0"),
                t0=data.get("t0"),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed domino system payload: {e}")


@dataclass
class Tiling:
    """Tiles placed on a k-triangle or a k×k square"""

    k: int
    cells: Dict[Position, str] = field(default_factory=dict)
    shape: str = "triangle"

    def positions(self) -> List[Position]:
        return triangle_positions(self.k) if self.shape == "triangle" else square_positions(self.k)

    def violations(self, system: DominoSystem) -> List[str]:
        """Missing cells and broken matching conditions, empty for a solution"""
        problems = []
        domain = self.positions()
        for pos in domain:
            if pos not in self.cells:
                problems.append(f"no tile at {pos}")
        for (x, y), tile in sorted(self.cells.items()):
            right = self.cells.get((x + 1, y))
            if right is not None and (tile, right) not in system.h:
                problems.append(f"H fails between {(x, y)} and {(x + 1, y)}: ({tile}, {right})")
            above = self.cells.get((x, y + 1))
            if above is not None and (tile, above) not in system.v:
                problems.append(f"V fails between {(x, y)} and {(x, y + 1)}: ({tile}, {above})")
        if self.shape == "triangle":
            if system.s0 is not None and self.cells.get((0, 0)) != system.s0:
                problems.append(f"origin is not {system.s0}")
            if system.f0 is not None and system.f0 not in self.cells.values():
                problems.append(f"{system.f0} does not occur")
        return problems

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "shape": self.shape,
            "cells": {f"{x},{y}": t for (x, y), t in sorted(self.cells.items())},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Tiling":
        try:
            cells = {}
            for key, tile in data["cells"].items():
                x, y = (int(c) for c in key.split(","))
                cells[(x, y)] = str(tile)
            return cls(int(data["k"]), cells, data.get("shape", "triangle"))
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ValueError(f"malformed tiling payload: {e}")


def _search(system: DominoSystem, positions: Sequence[Position], origin: Optional[str],
            required: Optional[str]) -> Optional[Dict[Position, str]]:
    """Depth-first search; every position's left and lower neighbours precede it"""
    right, up = system.right_options(), system.up_options()
    cells: Dict[Position, str] = {}
    visited = 0

    def candidates(pos: Position) -> Iterable[str]:
        x, y = pos
        options: Sequence[str] = system.tiles
        if pos == (0, 0) and origin is not None:
            options = [origin]
        left, below = cells.get((x - 1, y)), cells.get((x, y - 1))
        if left is not None:
            allowed = set(right[left])
            options = [t for t in options if t in allowed]
        if below is not None:
            allowed = set(up[below])
            options = [t for t in options if t in allowed]
        return options

    def extend(n: int) -> bool:
        nonlocal visited
        if n == len(positions):
            return required is None or required in cells.values()
        pos = positions[n]
        for tile in candidates(pos):
            visited += 1
            cells[pos] = tile
            if extend(n + 1):
                return True
            del cells[pos]
        return False

    found = extend(0)
    LOGGER.debug("tiling search over %d positions: %d placements, %s",
                 len(positions), visited, "found" if found else "none")
    return dict(cells) if found else None


def tile_triangle(system: DominoSystem, k: int) -> Optional[Tiling]:
    """
    Tiling of the k-triangle with s0 at the origin and f0 somewhere

    The distinguished tiles only constrain the search when the system
    declares them.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    cells = _search(system, triangle_positions(k), system.s0, system.f0)
    return Tiling(k, cells, "triangle") if cells is not None else None


def tile_square(system: DominoSystem, k: int) -> Optional[Tiling]:
    """Tiling of the k×k square (a prefix of a quadrant solution)"""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    cells = _search(system, square_positions(k), None, None)
    return Tiling(k, cells, "square") if cells is not None else None


def find_triangle(system: DominoSystem, max_k: Optional[int] = None,
                  config: Optional[Config] = None) -> Optional[Tiling]:
    """Smallest k-triangle tiling with k <= max_k (reductions.max_triangle by default)"""
    config = config or get_config()
    if max_k is None:
        max_k = config.get("reductions.max_triangle", 12)
    for k in range(max_k + 1):
        tiling = tile_triangle(system, k)
        if tiling is not None:
            LOGGER.info("found a %d-triangle tiling", k)
            return tiling
    return None


def brute_force_triangle(system: DominoSystem, k: int) -> bool:
    """Oracle: try every assignment of tiles to the k-triangle"""
    positions = triangle_positions(k)
    for choice in itertools.product(system.tiles, repeat=len(positions)):
        tiling = Tiling(k, dict(zip(positions, choice)))
        if not tiling.violations(system):
            return True
    return False
