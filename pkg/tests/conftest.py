import random

import pytest

from wienertree.geometry import PointSet
from wienertree.oracle import prufer_decode
from wienertree.tree import SpanningTree


def random_tree(n, rng):
    if n == 1:
        return SpanningTree(1, ())
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_points(n, rng, scale=10.0):
    return PointSet.from_xy([(rng.uniform(0, scale), rng.uniform(0, scale)) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240611)
