"""Fixtures package initialization"""

from .fixture_manager import KINDS, Fixture, FixtureManager, table_from_dict, table_to_dict

__all__ = [
    "KINDS",
    "Fixture",
    "FixtureManager",
    "table_from_dict",
    "table_to_dict",
]
