"""Seeded generation of molecule-like random graphs.

Stands in for molecular datasets that cannot be redistributed: connected
graphs with degree at most 4, mostly tree-like with a few extra cycle
edges, vertices labeled with atom symbols and edges with bond orders.
Everything is reproducible from the seed.
"""

from __future__ import annotations

import random

from .graph_core import LabeledGraph

ATOMS = ("C", "N", "O")
ATOM_WEIGHTS = (0.7, 0.2, 0.1)
BONDS = ("1", "2")
BOND_WEIGHTS = (0.85, 0.15)

MAX_DEGREE = 4


def _pick_count(rng, vertex_count):
    if isinstance(vertex_count, int):
        return vertex_count
    lo, hi = vertex_count
    return rng.randint(lo, hi)


def molecule_like(rng: random.Random, n_vertices: int,
                  atoms=ATOMS, atom_weights=None,
                  bonds=BONDS, bond_weights=None,
                  name=None) -> LabeledGraph:
    """One connected degree-capped random graph.

    Grows a random tree under the degree cap, then adds a few extra edges
    between non-adjacent vertices with spare degree, creating cycles.
    """
    if n_vertices < 1:
        raise ValueError("n_vertices must be >= 1")
    if atom_weights is None:
        atom_weights = ATOM_WEIGHTS if atoms == ATOMS else None
    if bond_weights is None:
        bond_weights = BOND_WEIGHTS if bonds == BONDS else None
    labels = rng.choices(list(atoms), weights=atom_weights, k=n_vertices)
    degree = [0] * n_vertices
    edges = {}

    def bond():
        return rng.choices(list(bonds), weights=bond_weights, k=1)[0]

    for v in range(1, n_vertices):
        anchors = [u for u in range(v) if degree[u] < MAX_DEGREE]
        u = rng.choice(anchors)
        edges[(u, v)] = bond()
        degree[u] += 1
        degree[v] += 1

    extra = rng.randint(0, max(1, n_vertices // 7))
    for _ in range(extra):
        open_vs = [v for v in range(n_vertices) if degree[v] < MAX_DEGREE]
        rng.shuffle(open_vs)
        placed = False
        for i in range(len(open_vs)):
            if placed:
                break
            for j in range(i + 1, len(open_vs)):
                a, b = sorted((open_vs[i], open_vs[j]))
                if (a, b) not in edges:
                    edges[(a, b)] = bond()
                    degree[a] += 1
                    degree[b] += 1
                    placed = True
                    break
    return LabeledGraph(n_vertices, labels, edges, name=name)


def generate_corpus(count: int, vertex_count, atoms=ATOMS, bonds=BONDS,
                    seed: int = 0):
    """count independent molecule-like graphs; vertex_count is an int or an
    inclusive (lo, hi) range."""
    rng = random.Random(seed)
    return [molecule_like(rng, _pick_count(rng, vertex_count),
                          atoms=atoms, bonds=bonds, name=f"g{i}")
            for i in range(count)]


def generate_instances(count: int, graphs_per_instance: int, vertex_count,
                       atoms=ATOMS, bonds=BONDS, seed: int = 0):
    """count instances of graphs_per_instance molecule-like graphs each."""
    rng = random.Random(seed)
    corpus = []
    for i in range(count):
        corpus.append([
            molecule_like(rng, _pick_count(rng, vertex_count),
                          atoms=atoms, bonds=bonds, name=f"i{i}_g{j}")
            for j in range(graphs_per_instance)
        ])
    return corpus
