"""
Concrete realization of satisfiable networks

An atomic refinement is first realized in a fork frame by choosing one
column of shapes per fork, then every fork is laid out on the real line so
that each region becomes a finite union of rational intervals.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from ..algebra.relations import BaseRelation8, Kind
from ..config import Config, get_config
from ..errors import KindMismatchError, RealizationMismatch, SearchExhausted
from ..geometry.forks import ForkFrame, ForkRegion, Shape
from ..geometry.intervals import IntervalUnion, rel_intervals
from ..structures.region_structure import RegionStructure, induced
from .closure import Unsat, satisfiable_rs
from .network import ConstraintNetwork

LOGGER = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)
TWELFTH = Fraction(1, 12)

# Per ordered pair, six flags collected over all forks:
# points meet, interiors meet, s ⊄ t, t ⊄ s, s ⊄ I(t), t ⊄ I(s).
_TARGETS = {
    BaseRelation8.DC: (0, 0, 1, 1, 1, 1),
    BaseRelation8.EC: (1, 0, 1, 1, 1, 1),
    BaseRelation8.PO: (1, 1, 1, 1, 1, 1),
    BaseRelation8.TPP: (1, 1, 0, 1, 1, 1),
    BaseRelation8.NTPP: (1, 1, 0, 1, 0, 1),
    BaseRelation8.TPPI: (1, 1, 1, 0, 1, 1),
    BaseRelation8.NTPPI: (1, 1, 1, 0, 1, 0),
}

_SHAPES = (Shape.EMPTY, Shape.LEFT, Shape.RIGHT, Shape.BOTH)


def _pair_flags(a: Shape, b: Shape) -> Tuple[int, ...]:
    pa, pb = a.points(1), b.points(1)
    ia, ib = a.interior(1), b.interior(1)
    return (
        int(bool(pa & pb)),
        int(bool(ia & ib)),
        int(not pa <= pb),
        int(not pb <= pa),
        int(not pa <= ib),
        int(not pb <= ia),
    )


_PAIR_FLAGS = {(a, b): _pair_flags(a, b) for a in _SHAPES for b in _SHAPES}


def _bit_layout(v: int) -> Tuple[List[Tuple[int, int]], int]:
    pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    return pairs, 6 * len(pairs) + v


def _target_mask(structure: RegionStructure, pairs: List[Tuple[int, int]]) -> int:
    mask = 0
    for p, (i, j) in enumerate(pairs):
        for f, flag in enumerate(_TARGETS[structure.rel(i, j)]):
            if flag:
                mask |= 1 << (6 * p + f)
    offset = 6 * len(pairs)
    for i in range(structure.size):
        mask |= 1 << (offset + i)
    return mask


def _column_mask(column: Tuple[Shape, ...], pairs: List[Tuple[int, int]]) -> int:
    mask = 0
    for p, (i, j) in enumerate(pairs):
        for f, flag in enumerate(_PAIR_FLAGS[(column[i], column[j])]):
            if flag:
                mask |= 1 << (6 * p + f)
    offset = 6 * len(pairs)
    for i, shape in enumerate(column):
        if shape is not Shape.EMPTY:
            mask |= 1 << (offset + i)
    return mask


def _admissible_columns(v: int, pairs: List[Tuple[int, int]], target: int) -> List[Tuple[int, Tuple[Shape, ...]]]:
    """Columns whose flags stay within the target, keeping only maximal flag sets"""
    seen: Dict[int, Tuple[Shape, ...]] = {}
    for column in itertools.product(_SHAPES, repeat=v):
        if all(shape is Shape.EMPTY for shape in column):
            continue
        mask = _column_mask(column, pairs)
        if mask & ~target or mask in seen:
            continue
        seen[mask] = column
    masks = list(seen)
    maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    return [(m, seen[m]) for m in maximal]


def _cover(target: int, columns: List[Tuple[int, Tuple[Shape, ...]]], forks: int) -> Optional[List[Tuple[Shape, ...]]]:
    failed = set()

    def search(uncovered: int, left: int) -> Optional[List[Tuple[Shape, ...]]]:
        if not uncovered:
            return []
        if left == 0 or (uncovered, left) in failed:
            return None
        # branch on the uncovered flag with the fewest covering columns
        best_options = None
        bits = uncovered
        while bits:
            bit = bits & -bits
            bits ^= bit
            options = [c for c in columns if c[0] & bit]
            if best_options is None or len(options) < len(best_options):
                best_options = options
                if len(options) <= 1:
                    break
        for mask, column in best_options:
            rest = search(uncovered & ~mask, left - 1)
            if rest is not None:
                return [column] + rest
        failed.add((uncovered, left))
        return None

    return search(target, forks)


def default_fork_cap(v: int) -> int:
    return v * (v - 1) // 2 + v


def realize_forks(structure: RegionStructure, cap: Optional[int] = None,
                  start: int = 1) -> Tuple[ForkFrame, Dict[str, ForkRegion]]:
    """
    Realize an atomic RCC8 structure in a fork frame

    Args:
        structure: Valid RCC8 region structure
        cap: Largest fork count tried (v(v-1)/2 + v when None)
        start: First fork count tried

    Returns:
        The frame and one fork region per region id
    """
    if structure.kind is not Kind.RCC8:
        raise KindMismatchError("fork realization expects an RCC8 structure")
    v = structure.size
    if v == 0:
        return ForkFrame(1), {}
    cap = cap if cap is not None else default_fork_cap(v)
    pairs, _ = _bit_layout(v)
    target = _target_mask(structure, pairs)
    columns = _admissible_columns(v, pairs, target)
    reachable = 0
    for mask, _ in columns:
        reachable |= mask
    if reachable != target:
        raise SearchExhausted(f"no fork columns cover the structure on {v} regions")

    for forks in range(max(1, start), cap + 1):
        chosen = _cover(target, columns, forks)
        LOGGER.debug("fork deepening: F=%d %s", forks, "found" if chosen is not None else "failed")
        if chosen is not None:
            frame = ForkFrame(len(chosen))
            assignment = {
                region: ForkRegion({f + 1: column[i] for f, column in enumerate(chosen)})
                for i, region in enumerate(structure.regions)
            }
            return frame, assignment
    raise SearchExhausted(f"no fork realization with at most {cap} forks")


def _radius_ranks(frame: ForkFrame,
                  assignment: Dict[str, ForkRegion]) -> Tuple[Dict[Tuple[int, str], int], Dict[int, int]]:
    """Per fork, rank regions of shape Both along a linear extension of containment"""
    points = {region: shapes.points(frame) for region, shapes in assignment.items()}
    ranks: Dict[Tuple[int, str], int] = {}
    counts: Dict[int, int] = {}
    for fork in range(1, frame.fork_count + 1):
        both = sorted(region for region, shapes in assignment.items() if shapes.shape(fork) is Shape.BOTH)
        graph = nx.DiGraph()
        graph.add_nodes_from(both)
        for a in both:
            for b in both:
                if a != b and points[a] < points[b]:
                    graph.add_edge(a, b)
        order = list(nx.lexicographical_topological_sort(graph))
        for rank, region in enumerate(order, start=1):
            ranks[(fork, region)] = rank
        counts[fork] = len(order)
    return ranks, counts


def embed_reals(frame: ForkFrame, assignment: Dict[str, ForkRegion]) -> Dict[str, IntervalUnion]:
    """
    Lay out every fork on the real line

    Fork i sits at coordinate i: Right becomes [i, i+1/4], Left [i-1/4, i]
    and Both [i-g, i+g] with g in (1/4, 1/3), growing along containment.
    """
    ranks, counts = _radius_ranks(frame, assignment)
    result = {}
    for region, shapes in assignment.items():
        shapes.check_frame(frame)
        pieces = []
        for fork, shape in shapes.shapes.items():
            i = Fraction(fork)
            if shape is Shape.RIGHT:
                pieces.append((i, i + QUARTER))
            elif shape is Shape.LEFT:
                pieces.append((i - QUARTER, i))
            elif shape is Shape.BOTH:
                m = counts[fork]
                g = QUARTER + ranks[(fork, region)] * TWELFTH / (m + 1)
                pieces.append((i - g, i + g))
        result[region] = IntervalUnion(pieces)
    return result


@dataclass
class Realization:
    """Interval regions for every variable, with the refinement they realize"""

    regions: Dict[str, IntervalUnion]
    refinement: RegionStructure
    frame: ForkFrame
    forks: Dict[str, ForkRegion]
    assignment: Dict[str, str] = field(default_factory=dict)
    verified: bool = True

    satisfiable = True

    def __bool__(self) -> bool:
        return True

    def to_dict(self) -> Dict:
        data = {var: self.regions[var].to_list() for var in sorted(self.regions)}
        data["refinement"] = self.refinement.to_dict()
        data["forks"] = {region: shapes.to_dict() for region, shapes in sorted(self.forks.items())}
        data["fork_count"] = self.frame.fork_count
        data["verified"] = self.verified
        return data


def realize(network: ConstraintNetwork, cap: Optional[int] = None,
            config: Optional[Config] = None) -> Union[Unsat, Realization]:
    """
    Satisfiability, fork realization and interval embedding in one pass

    Args:
        network: RCC8 network
        cap: Fork cap; falls back to 'solver.fork_cap' then v(v-1)/2 + v
        config: Configuration object

    Returns:
        Unsat, or a Realization whose induced relations were checked
        against the refinement
    """
    config = config or get_config()
    if network.kind is not Kind.RCC8:
        raise KindMismatchError("realization is defined for RCC8 networks")
    verdict = satisfiable_rs(network)
    if isinstance(verdict, Unsat):
        return verdict
    structure = verdict.structure
    if cap is None:
        cap = config.get("solver.fork_cap")
    start = int(config.get("solver.deepening_start", 1) or 1)
    frame, forks = realize_forks(structure, cap=cap, start=start)
    intervals = embed_reals(frame, forks)

    ordered = [intervals[r] for r in structure.regions]
    try:
        geometric = induced(ordered, list(structure.regions))
    except Exception as e:
        raise RealizationMismatch(f"embedded regions do not form a structure: {e}")
    if geometric.matrix != structure.matrix:
        raise RealizationMismatch("embedded intervals do not reproduce the refinement")
    LOGGER.info("realized %d regions on %d forks", structure.size, frame.fork_count)

    regions = {var: intervals[region] for var, region in verdict.assignment.items()}
    return Realization(regions, structure, frame, forks, dict(verdict.assignment))


def grid_interval_realizable(network: ConstraintNetwork, grid: int) -> Optional[Dict[str, IntervalUnion]]:
    """
    Search single intervals [a, b] with integer endpoints 0 <= a < b <= grid

    Returns:
        A satisfying assignment, or None when the grid admits none
    """
    candidates = [IntervalUnion.single(a, b) for a in range(grid + 1) for b in range(a + 1, grid + 1)]
    chosen: List[IntervalUnion] = []

    def extend(k: int) -> bool:
        if k == network.size:
            return True
        for interval in candidates:
            if all(rel_intervals(chosen[i], interval) in network.constraint_by_index(i, k) for i in range(k)):
                chosen.append(interval)
                if extend(k + 1):
                    return True
                chosen.pop()
        return False

    if network.self_conflicts or not extend(0):
        return None
    return dict(zip(network.variables, chosen))
