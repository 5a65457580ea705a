"""
Regions of the real line: finite unions of closed intervals
"""

import random
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ..algebra.relations import BaseRelation8
from .cases import relation_from_sets
from .rational import RationalLike, format_rational, to_rational

Interval = Tuple[Fraction, Fraction]


class IntervalUnion:
    """
    Normalized union of non-degenerate closed intervals with rational endpoints

    Intervals are sorted, pairwise disjoint and separated by a gap; touching
    or overlapping pieces are merged on construction.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Tuple[RationalLike, RationalLike]]):
        pieces = []
        for lo, hi in intervals:
            lo, hi = to_rational(lo), to_rational(hi)
            if not lo < hi:
                raise ValueError(f"degenerate interval [{format_rational(lo)}, {format_rational(hi)}]")
            pieces.append((lo, hi))
        if not pieces:
            raise ValueError("a region needs at least one interval")
        pieces.sort()
        merged: List[Interval] = [pieces[0]]
        for lo, hi in pieces[1:]:
            last_lo, last_hi = merged[-1]
            if lo <= last_hi:
                merged[-1] = (last_lo, max(last_hi, hi))
            else:
                merged.append((lo, hi))
        self.intervals: Tuple[Interval, ...] = tuple(merged)

    @classmethod
    def single(cls, lo: RationalLike, hi: RationalLike) -> "IntervalUnion":
        return cls([(lo, hi)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalUnion) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        return " ∪ ".join(f"[{format_rational(lo)}, {format_rational(hi)}]" for lo, hi in self.intervals)

    def to_list(self) -> List[List[str]]:
        return [[format_rational(lo), format_rational(hi)] for lo, hi in self.intervals]

    @classmethod
    def from_list(cls, data: Sequence[Sequence[RationalLike]]) -> "IntervalUnion":
        try:
            return cls([(pair[0], pair[1]) for pair in data])
        except (TypeError, IndexError):
            raise ValueError(f"malformed interval list: {data!r}")

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(self.intervals + other.intervals)

    def meets(self, other: "IntervalUnion") -> bool:
        return any(a_lo <= b_hi and b_lo <= a_hi
                   for a_lo, a_hi in self.intervals for b_lo, b_hi in other.intervals)

    def interiors_meet(self, other: "IntervalUnion") -> bool:
        return any(a_lo < b_hi and b_lo < a_hi
                   for a_lo, a_hi in self.intervals for b_lo, b_hi in other.intervals)

    def subset_of(self, other: "IntervalUnion") -> bool:
        # Each piece is connected, so it lies inside a single component.
        return all(any(b_lo <= a_lo and a_hi <= b_hi for b_lo, b_hi in other.intervals)
                   for a_lo, a_hi in self.intervals)

    def subset_of_interior(self, other: "IntervalUnion") -> bool:
        return all(any(b_lo < a_lo and a_hi < b_hi for b_lo, b_hi in other.intervals)
                   for a_lo, a_hi in self.intervals)


def rel_intervals(s: IntervalUnion, t: IntervalUnion) -> BaseRelation8:
    """RCC8 relation between two interval unions, by exact endpoint arithmetic"""
    return relation_from_sets(
        s.meets(t),
        s.interiors_meet(t),
        s.subset_of(t),
        t.subset_of(s),
        s.subset_of_interior(t),
        t.subset_of_interior(s),
    )


def random_interval_union(rng: random.Random, pieces: int = 4, grid: int = 8,
                          denominator: int = 2) -> IntervalUnion:
    """
    Random region on the line with up to `pieces` intervals

    Endpoints are multiples of 1/denominator in [0, grid]; the small grid
    makes touching endpoints (and hence ec/tpp) frequent.
    """
    count = rng.randint(1, pieces)
    steps = grid * denominator
    intervals = []
    for _ in range(count):
        lo = rng.randint(0, steps - 1)
        hi = rng.randint(lo + 1, min(steps, lo + 1 + steps // 2))
        intervals.append((Fraction(lo, denominator), Fraction(hi, denominator)))
    return IntervalUnion(intervals)
