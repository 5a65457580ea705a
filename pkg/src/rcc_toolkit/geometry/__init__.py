"""Geometry package initialization"""

from .cases import relation_from_sets
from .forks import (
    ForkFrame,
    ForkRegion,
    Shape,
    alexandrov_closure,
    alexandrov_interior,
    random_fork_region,
    rel_fork,
)
from .intervals import IntervalUnion, random_interval_union, rel_intervals
from .rational import Rational, format_rational, parse_rational, to_rational
from .rects import HyperRect, random_rect, rel_rects
from .relate import Region, rel5_of, relate

__all__ = [
    "relation_from_sets",
    "ForkFrame",
    "ForkRegion",
    "Shape",
    "alexandrov_closure",
    "alexandrov_interior",
    "random_fork_region",
    "rel_fork",
    "IntervalUnion",
    "random_interval_union",
    "rel_intervals",
    "Rational",
    "format_rational",
    "parse_rational",
    "to_rational",
    "HyperRect",
    "random_rect",
    "rel_rects",
    "Region",
    "rel5_of",
    "relate",
]
