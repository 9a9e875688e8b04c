import math
from itertools import combinations

import pytest

from turanlocal import WeightedGraph, enumerate_graphs

S2 = math.sqrt(2.0)
S3 = math.sqrt(3.0)
S6 = math.sqrt(6.0)


def graph(n, *pairs):
    return WeightedGraph(n, tuple((u, v, 1.0) for u, v in pairs))


def complete(n):
    return graph(n, *combinations(range(n), 2))


def complete_multipartite(*sizes):
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    pairs = [(u, v) for i, a in enumerate(parts) for b in parts[i + 1:]
             for u in a for v in b]
    return graph(start, *pairs)


def cycle(n):
    return graph(n, *(((i, (i + 1) % n)) for i in range(n)))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return graph(10, *(outer + inner + spokes))


# the weighted complete 3-partite showcase graph: parts {0}, {1,2}, {3,4}
EXAMPLE1_EDGES = (
    (0, 1, 1.0), (0, 2, S2), (0, 3, S6 / 2), (0, 4, S6 / 2),
    (1, 3, S2 / 2), (1, 4, S2 / 2), (2, 3, 1.0), (2, 4, 1.0),
)

EXAMPLE1_WEL = """5 8
0 1 1
0 2 1.4142135624
0 3 1.2247448714
0 4 1.2247448714
1 3 0.7071067812
1 4 0.7071067812
2 3 1
2 4 1
"""

EXAMPLE1_W = tuple(3 ** 0.25 * x for x in (1.0, S3 / 3, S6 / 3, S2 / 2, S2 / 2))


@pytest.fixture(scope="session")
def example1():
    return WeightedGraph(5, EXAMPLE1_EDGES)


@pytest.fixture(scope="session")
def paw():
    # triangle {0,1,2} plus pendant 3 attached at 0
    return graph(4, (0, 1), (0, 2), (1, 2), (0, 3))


@pytest.fixture(scope="session")
def c5():
    return cycle(5)


@pytest.fixture(scope="session")
def corpus6():
    """All isomorphism classes with 1 <= n <= 6 (208 graphs)."""
    return [g for n in range(1, 7) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def corpus7():
    """All isomorphism classes with 1 <= n <= 7 (1252 graphs)."""
    return [g for n in range(1, 8) for g in enumerate_graphs(n)]


# -- independent oracles -------------------------------------------------


def oracle_subset_cliques(g: WeightedGraph):
    """Exhaustive-subset clique data: (omega, cl_v, cl_e) by trying all
    vertex subsets; independent of the branch-and-bound path."""
    masks = g.neighbor_masks
    n = g.n

    def is_clique(subset):
        return all(masks[u] & (1 << v) for u, v in combinations(subset, 2))

    cliques = [s for k in range(n + 1) for s in combinations(range(n), k)
               if is_clique(s)]
    omega = max((len(s) for s in cliques), default=0)
    cl_v = tuple(max(len(s) for s in cliques if v in s) for v in range(n))
    cl_e = {(u, v): max(len(s) for s in cliques if u in s and v in s)
            for u, v, _ in g.edges}
    return omega, cl_v, cl_e
