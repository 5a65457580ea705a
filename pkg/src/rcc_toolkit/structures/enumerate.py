"""
Exhaustive enumeration of small labeled region structures
"""

import itertools
import logging
from typing import Any, Iterator, List, Optional, Union

from ..algebra.relations import BaseRelation, Kind
from ..algebra.tables import table_for
from ..config import Config, get_config
from ..errors import BoundExceededError
from .region_structure import RegionStructure, validate

LOGGER = logging.getLogger(__name__)

DEFAULT_LIMIT = 6

# limit placeholder: read structures.max_enumeration_size
_CONFIGURED: Any = object()


def _region_ids(k: int) -> List[str]:
    return [f"r{i + 1}" for i in range(k)]


def _pairs(k: int):
    # Column-major upper triangle: every pair (i, j) comes after all pairs
    # inside {0..j-1}, so the triangle {m, i, j} with m < i closes at (i, j).
    return [(i, j) for j in range(1, k) for i in range(j)]


def enumerate_structures(kind: Union[Kind, str], k: int,
                         limit: Optional[int] = _CONFIGURED,
                         config: Optional[Config] = None) -> Iterator[RegionStructure]:
    """
    Stream every valid structure on k labeled regions r1..rk

    Pairs are filled in a fixed order with relations in canonical order and
    each triangle is checked as soon as it is complete, so the stream is
    deterministic and duplicate-free.

    Args:
        kind: RCC8 or RCC5
        k: Number of regions
        limit: Largest k accepted (None disables the guard);
            'structures.max_enumeration_size' when omitted
        config: Configuration object

    Yields:
        RegionStructure instances
    """
    kind = Kind.parse(kind)
    if k < 1:
        raise ValueError("structures need at least one region")
    if limit is _CONFIGURED:
        limit = (config or get_config()).get("structures.max_enumeration_size", DEFAULT_LIMIT)
    if limit is not None and k > limit:
        raise BoundExceededError(f"enumerating {kind.value} structures of size {k} exceeds the limit {limit}")

    ids = _region_ids(k)
    identity = kind.identity
    proper = kind.proper
    table = table_for(kind)
    pairs = _pairs(k)
    rel: List[List[Optional[BaseRelation]]] = [[None] * k for _ in range(k)]
    for i in range(k):
        rel[i][i] = identity

    def consistent(i: int, j: int) -> bool:
        for m in range(i):
            # every orientation of the triangle {m, i, j}
            for a, b, c in ((m, i, j), (i, m, j), (m, j, i), (i, j, m), (j, m, i), (j, i, m)):
                if rel[a][c] not in table.compose(rel[a][b], rel[b][c]):
                    return False
        return True

    def extend(position: int) -> Iterator[RegionStructure]:
        if position == len(pairs):
            yield RegionStructure(kind, ids, [list(row) for row in rel], check=False)
            return
        i, j = pairs[position]
        for r in proper:
            rel[i][j] = r
            rel[j][i] = r.converse()
            if consistent(i, j):
                yield from extend(position + 1)
        rel[i][j] = rel[j][i] = None

    LOGGER.debug("enumerating %s structures on %d regions", kind.value, k)
    yield from extend(0)


def naive_structures(kind: Union[Kind, str], k: int) -> List[RegionStructure]:
    """Filter every choice of upper-triangle relations through validate"""
    kind = Kind.parse(kind)
    ids = _region_ids(k)
    pairs = _pairs(k)
    result = []
    for choice in itertools.product(kind.proper, repeat=len(pairs)):
        matrix = [[kind.identity] * k for _ in range(k)]
        for (i, j), r in zip(pairs, choice):
            matrix[i][j] = r
            matrix[j][i] = r.converse()
        if not validate(matrix, kind):
            result.append(RegionStructure(kind, ids, matrix, check=False))
    return result
