"""Shared fixtures: small graphs with hand-checked group structure."""

import pytest

from tests.helpers import make_graph


@pytest.fixture
def triangle():
    return make_graph([(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def star():
    """Center 0 with leaves 1, 2, 3."""
    return make_graph([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def path3():
    return make_graph([(1, 2), (2, 3)])


@pytest.fixture
def k3_pendant():
    return make_graph([(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def two_triangles():
    return make_graph([(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])


@pytest.fixture
def single_link():
    return make_graph([(1, 2)])
