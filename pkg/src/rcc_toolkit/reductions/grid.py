"""
Enumeration of the positions of the first quadrant

Positions are numbered from 1 along anti-diagonals. Each diagonal starts
on the floor and climbs to the wall:

    1 -> (0,0), 2 -> (1,0), 3 -> (0,1), 4 -> (2,0), 5 -> (1,1), 6 -> (0,2), ...

so the position after a wall position is on the floor, going right adds
the length of the current diagonal, and going up is going right and then
one step forward.
"""

from math import isqrt
from typing import List, Optional, Tuple

Position = Tuple[int, int]


def _diagonal(i: int) -> int:
    return (isqrt(8 * (i - 1) + 1) - 1) // 2


def lambda_(i: int) -> Position:
    """Position with number i (i >= 1)"""
    if i < 1:
        raise ValueError(f"positions are numbered from 1, got {i}")
    d = _diagonal(i)
    y = i - 1 - d * (d + 1) // 2
    return (d - y, y)


def lambda_inv(x: int, y: int) -> int:
    """Number of the position (x, y)"""
    if x < 0 or y < 0:
        raise ValueError(f"not a position of the first quadrant: ({x}, {y})")
    d = x + y
    return d * (d + 1) // 2 + y + 1


def dovetail_label(i: int) -> Position:
    """
    (diagonal, height) label of position i

    This is the labelling under which the first positions read (0,0),
    (1,0), (1,1).
    """
    x, y = lambda_(i)
    return (x + y, y)


def right_of(i: int) -> int:
    x, y = lambda_(i)
    return lambda_inv(x + 1, y)


def up_of(i: int) -> int:
    x, y = lambda_(i)
    return lambda_inv(x, y + 1)


def left_of(i: int) -> Optional[int]:
    x, y = lambda_(i)
    return lambda_inv(x - 1, y) if x > 0 else None


def on_wall(i: int) -> bool:
    return lambda_(i)[0] == 0


def on_floor(i: int) -> bool:
    return lambda_(i)[1] == 0


def triangle_size(k: int) -> int:
    """Number of positions (i, j) with i + j <= k"""
    return (k + 1) * (k + 2) // 2


def triangle_positions(k: int) -> List[Position]:
    """The k-triangle in enumeration order"""
    return [lambda_(i) for i in range(1, triangle_size(k) + 1)]


def square_positions(k: int) -> List[Position]:
    """The k×k square, ordered so left and lower neighbours come first"""
    cells = [(x, y) for x in range(k) for y in range(k)]
    return sorted(cells, key=lambda p: lambda_inv(*p))
