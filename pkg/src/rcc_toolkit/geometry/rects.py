"""
Axis-aligned boxes in n-dimensional space
"""

import random
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ..algebra.relations import BaseRelation8
from ..errors import DimensionMismatchError
from .cases import relation_from_sets
from .rational import RationalLike, format_rational, to_rational


class HyperRect:
    """Product of non-singleton closed intervals, one per dimension"""

    __slots__ = ("sides",)

    def __init__(self, sides: Iterable[Tuple[RationalLike, RationalLike]]):
        converted = []
        for lo, hi in sides:
            lo, hi = to_rational(lo), to_rational(hi)
            if not lo < hi:
                raise ValueError(f"singleton side [{format_rational(lo)}, {format_rational(hi)}]")
            converted.append((lo, hi))
        if not converted:
            raise ValueError("a box needs at least one dimension")
        self.sides: Tuple[Tuple[Fraction, Fraction], ...] = tuple(converted)

    @property
    def dims(self) -> int:
        return len(self.sides)

    def __eq__(self, other) -> bool:
        return isinstance(other, HyperRect) and self.sides == other.sides

    def __hash__(self) -> int:
        return hash(self.sides)

    def __repr__(self) -> str:
        return " × ".join(f"[{format_rational(lo)}, {format_rational(hi)}]" for lo, hi in self.sides)

    def to_list(self) -> List[List[str]]:
        return [[format_rational(lo), format_rational(hi)] for lo, hi in self.sides]

    @classmethod
    def from_list(cls, data: Sequence[Sequence[RationalLike]]) -> "HyperRect":
        try:
            return cls([(pair[0], pair[1]) for pair in data])
        except (TypeError, IndexError):
            raise ValueError(f"malformed box: {data!r}")

    def _pairs(self, other: "HyperRect"):
        if self.dims != other.dims:
            raise DimensionMismatchError(f"{self.dims}-dimensional box vs {other.dims}-dimensional box")
        return zip(self.sides, other.sides)

    def meets(self, other: "HyperRect") -> bool:
        return all(a_lo <= b_hi and b_lo <= a_hi for (a_lo, a_hi), (b_lo, b_hi) in self._pairs(other))

    def interiors_meet(self, other: "HyperRect") -> bool:
        return all(a_lo < b_hi and b_lo < a_hi for (a_lo, a_hi), (b_lo, b_hi) in self._pairs(other))

    def subset_of(self, other: "HyperRect") -> bool:
        return all(b_lo <= a_lo and a_hi <= b_hi for (a_lo, a_hi), (b_lo, b_hi) in self._pairs(other))

    def subset_of_interior(self, other: "HyperRect") -> bool:
        return all(b_lo < a_lo and a_hi < b_hi for (a_lo, a_hi), (b_lo, b_hi) in self._pairs(other))


def rel_rects(s: HyperRect, t: HyperRect) -> BaseRelation8:
    """RCC8 relation between two boxes of equal dimension"""
    return relation_from_sets(
        s.meets(t),
        s.interiors_meet(t),
        s.subset_of(t),
        t.subset_of(s),
        s.subset_of_interior(t),
        t.subset_of_interior(s),
    )


def random_rect(rng: random.Random, dims: int = 2, grid: int = 6) -> HyperRect:
    sides = []
    for _ in range(dims):
        lo = rng.randint(0, grid - 1)
        hi = rng.randint(lo + 1, grid)
        sides.append((lo, hi))
    return HyperRect(sides)
