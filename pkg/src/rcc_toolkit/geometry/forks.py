"""
Regions of fork frames

A fork frame is a disjoint union of forks; fork i has a base point b_i
below two leaves l_i and r_i. Open sets of the induced Alexandrov topology
are the up-closed point sets, so interior and closure are computed on the
order directly. Regions are given by one shape per fork, which keeps them
regular closed by construction.
"""

import random
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from ..algebra.relations import BaseRelation8
from ..errors import FrameMismatchError
from .cases import relation_from_sets

Point = Tuple[int, str]

BASE, LEFT_LEAF, RIGHT_LEAF = "b", "l", "r"


class Shape(Enum):
    EMPTY = "empty"
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"

    def points(self, fork: int) -> FrozenSet[Point]:
        return frozenset((fork, p) for p in _SHAPE_POINTS[self])

    def interior(self, fork: int) -> FrozenSet[Point]:
        return frozenset((fork, p) for p in _SHAPE_INTERIOR[self])


_SHAPE_POINTS = {
    Shape.EMPTY: (),
    Shape.LEFT: (BASE, LEFT_LEAF),
    Shape.RIGHT: (BASE, RIGHT_LEAF),
    Shape.BOTH: (BASE, LEFT_LEAF, RIGHT_LEAF),
}

_SHAPE_INTERIOR = {
    Shape.EMPTY: (),
    Shape.LEFT: (LEFT_LEAF,),
    Shape.RIGHT: (RIGHT_LEAF,),
    Shape.BOTH: (BASE, LEFT_LEAF, RIGHT_LEAF),
}


class ForkFrame:
    """Forks indexed 1..fork_count"""

    __slots__ = ("fork_count",)

    def __init__(self, fork_count: int):
        if fork_count < 1:
            raise ValueError("a fork frame needs at least one fork")
        self.fork_count = fork_count

    def points(self) -> FrozenSet[Point]:
        return frozenset((i, p) for i in range(1, self.fork_count + 1)
                         for p in (BASE, LEFT_LEAF, RIGHT_LEAF))

    def above(self, point: Point) -> FrozenSet[Point]:
        """Points y with point ≤ y (reflexive)"""
        fork, kind = point
        if kind == BASE:
            return frozenset({(fork, BASE), (fork, LEFT_LEAF), (fork, RIGHT_LEAF)})
        return frozenset({point})

    def below(self, point: Point) -> FrozenSet[Point]:
        fork, kind = point
        if kind == BASE:
            return frozenset({point})
        return frozenset({point, (fork, BASE)})

    def __eq__(self, other) -> bool:
        return isinstance(other, ForkFrame) and self.fork_count == other.fork_count

    def __hash__(self) -> int:
        return hash(self.fork_count)

    def __repr__(self) -> str:
        return f"ForkFrame({self.fork_count})"


def _check_points(frame: ForkFrame, points: Iterable[Point]) -> None:
    for fork, kind in points:
        if not 1 <= fork <= frame.fork_count or kind not in (BASE, LEFT_LEAF, RIGHT_LEAF):
            raise FrameMismatchError(f"point {(fork, kind)} is outside {frame!r}")


def alexandrov_interior(frame: ForkFrame, points: Iterable[Point]) -> FrozenSet[Point]:
    """Points all of whose successors lie in the set"""
    points = frozenset(points)
    _check_points(frame, points)
    return frozenset(x for x in points if frame.above(x) <= points)


def alexandrov_closure(frame: ForkFrame, points: Iterable[Point]) -> FrozenSet[Point]:
    """Points with some successor in the set"""
    points = frozenset(points)
    _check_points(frame, points)
    closure = set()
    for x in points:
        closure |= frame.below(x)
    return frozenset(closure)


class ForkRegion:
    """Non-empty region given by one shape per fork; absent forks are Empty"""

    __slots__ = ("shapes",)

    def __init__(self, shapes: Mapping[int, "Shape | str"]):
        converted: Dict[int, Shape] = {}
        for fork, shape in shapes.items():
            shape = shape if isinstance(shape, Shape) else Shape(str(shape).lower())
            if int(fork) < 1:
                raise ValueError(f"fork index must be positive, got {fork}")
            if shape is not Shape.EMPTY:
                converted[int(fork)] = shape
        if not converted:
            raise ValueError("a fork region must be non-empty")
        self.shapes: Dict[int, Shape] = dict(sorted(converted.items()))

    def shape(self, fork: int) -> Shape:
        return self.shapes.get(fork, Shape.EMPTY)

    @property
    def max_fork(self) -> int:
        return max(self.shapes)

    def check_frame(self, frame: ForkFrame) -> None:
        if self.max_fork > frame.fork_count:
            raise FrameMismatchError(f"region uses fork {self.max_fork} but {frame!r}")

    def points(self, frame: Optional[ForkFrame] = None) -> FrozenSet[Point]:
        if frame is not None:
            self.check_frame(frame)
        result = set()
        for fork, shape in self.shapes.items():
            result |= shape.points(fork)
        return frozenset(result)

    def interior(self, frame: Optional[ForkFrame] = None) -> FrozenSet[Point]:
        if frame is not None:
            self.check_frame(frame)
        result = set()
        for fork, shape in self.shapes.items():
            result |= shape.interior(fork)
        return frozenset(result)

    def __eq__(self, other) -> bool:
        return isinstance(other, ForkRegion) and self.shapes == other.shapes

    def __hash__(self) -> int:
        return hash(tuple(self.shapes.items()))

    def __repr__(self) -> str:
        return "{" + ", ".join(f"f{i}:{s.value}" for i, s in self.shapes.items()) + "}"

    def to_dict(self) -> Dict[str, str]:
        return {str(fork): shape.value for fork, shape in self.shapes.items()}

    @classmethod
    def from_dict(cls, data: Mapping) -> "ForkRegion":
        try:
            return cls({int(k): v for k, v in data.items()})
        except (AttributeError, TypeError):
            raise ValueError(f"malformed fork region: {data!r}")


def rel_fork(frame: ForkFrame, s: ForkRegion, t: ForkRegion) -> BaseRelation8:
    """RCC8 relation between two fork regions in the given frame"""
    s_points, t_points = s.points(frame), t.points(frame)
    s_interior = alexandrov_interior(frame, s_points)
    t_interior = alexandrov_interior(frame, t_points)
    return relation_from_sets(
        bool(s_points & t_points),
        bool(s_interior & t_interior),
        s_points <= t_points,
        t_points <= s_points,
        s_points <= t_interior,
        t_points <= s_interior,
    )


def random_fork_region(rng: random.Random, forks: int = 4) -> ForkRegion:
    shapes = list(Shape)
    while True:
        region = {i: rng.choice(shapes) for i in range(1, forks + 1)}
        if any(shape is not Shape.EMPTY for shape in region.values()):
            return ForkRegion(region)
