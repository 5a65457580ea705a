"""
Shared fixtures for the test suite
"""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from rcc_toolkit.config import Config, reset_config  # noqa: E402
from rcc_toolkit.geometry import IntervalUnion  # noqa: E402
from rcc_toolkit.structures import RegionStructure, induced  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def config(tmp_path):
    """Fresh configuration with an empty fixture directory"""
    reset_config()
    config = Config()
    config.set("fixtures.directory", str(tmp_path / "fixtures"))
    yield config
    reset_config()


@pytest.fixture
def chain_structure():
    """r1 ntpp r2 ntpp r3 on the line"""
    regions = [IntervalUnion.single(1, 2), IntervalUnion.single(0, 3), IntervalUnion.single(-1, 4)]
    return induced(regions, ["r1", "r2", "r3"])


@pytest.fixture
def pair_structure():
    return RegionStructure("rcc8", ["a", "b"], [["eq", "ec"], ["ec", "eq"]])
