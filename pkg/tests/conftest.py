import itertools
import random

import pytest

from mcsearch.graph_core import UNLABELED, LabeledGraph

ATOMS = "CNO"
BONDS = ("1", "2")


def ug(n, edges, name=None):
    """Unlabeled graph shorthand."""
    return LabeledGraph(n, [UNLABELED] * n, {e: UNLABELED for e in edges},
                        name=name)


def lg(vlabels, edges, name=None):
    """Labeled graph shorthand: lg("CNC", {(0, 1): "1", ...})."""
    return LabeledGraph(len(vlabels), list(vlabels), edges, name=name)


def k3():
    return ug(3, [(0, 1), (0, 2), (1, 2)])


def claw():
    return ug(4, [(0, 1), (0, 2), (0, 3)])


def p3():
    return ug(3, [(0, 1), (1, 2)])


def k2():
    return ug(2, [(0, 1)])


def random_graph(rng, max_n=6, labeled=True, edge_prob=0.45, max_edges=None):
    n = rng.randint(1, max_n)
    pool = list(itertools.combinations(range(n), 2))
    rng.shuffle(pool)
    edges = {}
    for (i, j) in pool:
        if max_edges is not None and len(edges) >= max_edges:
            break
        if rng.random() < edge_prob:
            edges[(i, j)] = rng.choice(BONDS) if labeled else UNLABELED
    labels = [rng.choice(ATOMS) if labeled else UNLABELED for _ in range(n)]
    return LabeledGraph(n, labels, edges)


def random_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
