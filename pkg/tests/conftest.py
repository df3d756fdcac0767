import numpy as np
import pytest

from icr.matrices import SAATY_SCALE, validate_incomplete

EXAMPLE1_TEXT = "1 * 9 *\n* 1 2 8\n1/9 1/2 1 4\n* 1/8 1/4 1\n"

EXAMPLE1_RAW = [
    [1, None, 9, None],
    [None, 1, 2, 8],
    [1 / 9, 1 / 2, 1, 4],
    [None, 1 / 8, 1 / 4, 1],
]

# Its bounded-optimal completion, treated as a complete matrix.
EXAMPLE1_A2 = [
    [1, 9 / 4, 9, 9],
    [4 / 9, 1, 2, 8],
    [1 / 9, 1 / 2, 1, 4],
    [1 / 9, 1 / 8, 1 / 4, 1],
]


@pytest.fixture
def example1():
    return validate_incomplete(EXAMPLE1_RAW)


def random_incomplete(rng, n, m):
    """Random instance with uniform scale entries and m missing pairs."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = rng.choice(len(pairs), size=m, replace=False)
    missing = {pairs[int(k)] for k in chosen}
    raw = [[None] * n for _ in range(n)]
    for i in range(n):
        raw[i][i] = 1.0
    for i, j in pairs:
        if (i, j) not in missing:
            v = float(SAATY_SCALE[int(rng.integers(0, 17))])
            raw[i][j] = v
            raw[j][i] = 1.0 / v
    return validate_incomplete(raw)


def random_connected_incomplete(rng, n, m):
    from icr.graph import build_graph, is_connected

    while True:
        matrix = random_incomplete(rng, n, m)
        if is_connected(build_graph(matrix)):
            return matrix


def random_spanning_tree_instance(rng, n):
    """Instance whose known entries form a random spanning tree."""
    perm = rng.permutation(n)
    edges = set()
    for idx in range(1, n):
        u = int(perm[idx])
        v = int(perm[int(rng.integers(0, idx))])
        edges.add((min(u, v), max(u, v)))
    raw = [[None] * n for _ in range(n)]
    for i in range(n):
        raw[i][i] = 1.0
    for i, j in edges:
        v = float(SAATY_SCALE[int(rng.integers(0, 17))])
        raw[i][j] = v
        raw[j][i] = 1.0 / v
    return validate_incomplete(raw)


def random_complete(rng, n):
    raw = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = float(SAATY_SCALE[int(rng.integers(0, 17))])
            raw[i, j] = v
            raw[j, i] = 1.0 / v
    from icr.matrices import validate_complete

    return validate_complete(raw)
