"""
Shared fixtures: the worked examples as named partitions.
"""

import pytest

from app.models.partition import make_partition
from app.utils.config_manager import ConfigManager


def signed(ctype, n, blocks):
    """Build a signed partition from one block of every +/- pair (zero blocks given whole)."""
    full = []
    for block in blocks:
        full.append(block)
        negative = sorted(-x for x in block)
        if sorted(block) != negative:
            full.append(negative)
    return make_partition(ctype, n, full)


@pytest.fixture
def figure_one():
    return make_partition("A", 9, [[1, 7, 9], [2, 5, 6], [3, 4], [8]])


@pytest.fixture
def figure_four():
    return signed("C", 5, [[1, 2, 4, -4, -2, -1], [3, -5]])


@pytest.fixture
def figure_five_a():
    return signed("B", 5, [[1, 2, -5], [3, 4, -3, -4]])


@pytest.fixture
def figure_five_b():
    return signed("B", 5, [[1, 2, 4, -5], [3, -3]])


@pytest.fixture
def figure_three_a():
    return signed("C", 5, [[1, -3], [2, 4, 5]])


@pytest.fixture
def negative_control_example():
    return make_partition("A", 8, [[1, 7], [2, 8], [3, 4, 5, 6]])


@pytest.fixture
def config_manager(tmp_path):
    return ConfigManager(tmp_path / "config" / "config.json")
