"""
Interval witnesses for domino-ready structures and models built from tilings
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from ..algebra.relations import BaseRelation8, Kind
from ..geometry.intervals import IntervalUnion
from ..geometry.rects import HyperRect
from ..geometry.relate import relate
from ..structures.region_structure import RegionStructure, Valuation, induced
from .domino import DominoSystem, Tiling
from .grid import lambda_, on_floor, on_wall, right_of
from .phi import VOCABULARY

LOGGER = logging.getLogger(__name__)

WitnessRegion = Union[IntervalUnion, HyperRect]

TPP, NTPP = BaseRelation8.TPP, BaseRelation8.NTPP


def _shape(lo: int, hi: int, dims: int) -> WitnessRegion:
    if dims == 1:
        return IntervalUnion.single(lo, hi)
    return HyperRect([(lo, hi)] * dims)


def domready_witness(count: int, dims: int = 1) -> Tuple[List[WitnessRegion], List[WitnessRegion]]:
    """
    Sequences x_1..x_2count and y_1..y_count of a domino-ready structure

    x_{2j-1} = [-j, j], x_{2j} = [-j, j+1] and y_i = [-i, j] where j is
    the position right of position i. With dims > 1 every region is the
    dims-fold product of its interval.

    Returns:
        (xs, ys), indexed from 0
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if dims < 1:
        raise ValueError(f"dims must be positive, got {dims}")
    xs: List[WitnessRegion] = []
    for j in range(1, count + 1):
        xs.append(_shape(-j, j, dims))
        xs.append(_shape(-j, j + 1, dims))
    ys = [_shape(-i, right_of(i), dims) for i in range(1, count + 1)]
    return xs, ys


def check_domino_ready(xs: Sequence[WitnessRegion], ys: Sequence[WitnessRegion]) -> List[str]:
    """
    Failures of the five domino-ready properties on the given prefix

    Checked for all indices the prefixes cover: x_i tpp x_{i+1};
    x_i ntpp x_j for j > i+1; x_{2i-1} tpp y_i; y_i tpp x_{2j-1} exactly
    when j is right of i; y_i ntpp y_j for j > i.
    """
    failures = []
    n = len(xs)
    for i in range(1, n):
        if relate(xs[i - 1], xs[i]) is not TPP:
            failures.append(f"x{i} tpp x{i + 1}")
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if relate(xs[i - 1], xs[j - 1]) is not NTPP:
                failures.append(f"x{i} ntpp x{j}")
    for i in range(1, len(ys) + 1):
        if 2 * i - 1 <= n and relate(xs[2 * i - 2], ys[i - 1]) is not TPP:
            failures.append(f"x{2 * i - 1} tpp y{i}")
        for j in range(1, (n + 1) // 2 + 1):
            expected = right_of(i) == j
            if (relate(ys[i - 1], xs[2 * j - 2]) is TPP) != expected:
                failures.append(f"y{i} tpp x{2 * j - 1} should be {expected}")
        for j in range(i + 1, len(ys) + 1):
            if relate(ys[i - 1], ys[j - 1]) is not NTPP:
                failures.append(f"y{i} ntpp y{j}")
    return failures


def _prefix_length(tiling: Tiling) -> int:
    m = 0
    while lambda_(m + 1) in tiling.cells:
        m += 1
    return m


def model_from_tiling(system: DominoSystem, tiling: Tiling, size: Optional[int] = None,
                      dims: int = 1) -> Tuple[RegionStructure, Valuation, str]:
    """
    Finite region model for the reduction formula built from a tiling

    Regions are r_i = x_{2i-1} for the first size positions, s_i = x_{2i}
    between consecutive r's, and t_i = y_i for every position whose right
    neighbour is among them. t_1 and s_1 are the same interval, so that
    region carries both a and c.

    Args:
        system: Domino system the tiling belongs to
        tiling: Tiling whose cells cover positions 1..size
        size: Number of positions; the longest covered prefix by default
        dims: Dimension of the boxes the structure is induced from

    Returns:
        (structure, valuation, id of r_1)
    """
    available = _prefix_length(tiling)
    if size is None:
        size = available
    if size < 1:
        raise ValueError("tiling does not cover position (0, 0)")
    if size > available:
        raise ValueError(f"tiling covers the first {available} positions, {size} requested")

    xs, ys = domready_witness(size, dims)
    ids: List[str] = []
    regions: List[WitnessRegion] = []
    for i in range(1, size + 1):
        ids.append(f"r{i}")
        regions.append(xs[2 * i - 2])
        if i < size:
            ids.append(f"s{i}")
            regions.append(xs[2 * i - 1])
    links = [i for i in range(1, size + 1) if right_of(i) <= size]
    for i in links:
        if i > 1:
            ids.append(f"t{i}")
            regions.append(ys[i - 1])
    structure = induced(regions, ids, kind=Kind.RCC8)

    rs = [f"r{i}" for i in range(1, size + 1)]
    ss = [f"s{i}" for i in range(1, size)]
    cs = [f"t{i}" if i > 1 else "s1" for i in links]
    a, b, c, wall, floor = VOCABULARY
    assignment = {
        a: rs + ss,
        b: rs,
        c: cs,
        wall: [f"r{i}" for i in range(1, size + 1) if on_wall(i)],
        floor: [f"r{i}" for i in range(1, size + 1) if on_floor(i)],
    }
    for tile in system.tiles:
        assignment[system.tile_variable(tile)] = [
            f"r{i}" for i in range(1, size + 1) if tiling.cells[lambda_(i)] == tile
        ]
    LOGGER.debug("model from tiling: %d positions, %d regions", size, structure.size)
    return structure, Valuation(assignment), "r1"
