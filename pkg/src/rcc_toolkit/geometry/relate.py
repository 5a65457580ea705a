"""
Relation dispatch over the supported region kinds
"""

from typing import Optional, Union

from ..algebra.relations import BaseRelation5, BaseRelation8, coarsen
from ..errors import FrameMismatchError
from .forks import ForkFrame, ForkRegion, rel_fork
from .intervals import IntervalUnion, rel_intervals
from .rects import HyperRect, rel_rects

Region = Union[IntervalUnion, HyperRect, ForkRegion]


def relate(s: Region, t: Region, frame: Optional[ForkFrame] = None) -> BaseRelation8:
    """
    RCC8 relation between two regions of the same kind

    Args:
        s: First region
        t: Second region
        frame: Fork frame; required only for fork regions (defaults to the
            smallest frame containing both)

    Returns:
        The base relation holding from s to t
    """
    if isinstance(s, IntervalUnion) and isinstance(t, IntervalUnion):
        return rel_intervals(s, t)
    if isinstance(s, HyperRect) and isinstance(t, HyperRect):
        return rel_rects(s, t)
    if isinstance(s, ForkRegion) and isinstance(t, ForkRegion):
        if frame is None:
            frame = ForkFrame(max(s.max_fork, t.max_fork))
        return rel_fork(frame, s, t)
    raise FrameMismatchError(f"cannot relate {type(s).__name__} to {type(t).__name__}")


def rel5_of(s: Region, t: Region, frame: Optional[ForkFrame] = None) -> BaseRelation5:
    """RCC5 relation between two regions (coarsened RCC8 relation)"""
    return coarsen(relate(s, t, frame))
