"""Modular products of labeled graphs with typed edges.

A product vertex is a pair (u, v) of factor vertices; an edge joins two
pairs with distinct coordinates on both sides when the coordinates are
edges in both factors with equal labels (type-1) or non-edges in both
(type-0).  In labeled mode, pairs whose vertex labels differ are excluded
from the vertex set entirely, and factor edges with mismatched labels
produce no product edge.
"""

from __future__ import annotations

import numpy as np

from .graph_core import (
    UNLABELED,
    GraphError,
    LabeledGraph,
    induced_subgraph_with_map,
    label_key,
)

TYPE0 = 0
TYPE1 = 1


class ProductGraph:
    """Modular product with per-edge type tags and factor coordinates.

    Not built directly; use modular_product().  Adjacency is kept as two
    boolean matrices (all edges / type-1 edges); integer bitmask rows for
    the clique kernels are derived lazily.
    """

    __slots__ = ("pairs", "vertex_labels", "left", "right",
                 "adj_mat", "t1_mat", "_masks")

    def __init__(self, pairs, vertex_labels, left, right, adj_mat, t1_mat):
        self.pairs = pairs
        self.vertex_labels = vertex_labels
        self.left = left
        self.right = right
        self.adj_mat = adj_mat
        self.t1_mat = t1_mat
        self._masks = None

    @property
    def n(self):
        return len(self.pairs)

    def edges(self):
        """Sorted (i, j, edge_type) triples with i < j."""
        out = []
        iu, ju = np.nonzero(np.triu(self.adj_mat, 1))
        for i, j in zip(iu.tolist(), ju.tolist()):
            out.append((i, j, TYPE1 if self.t1_mat[i, j] else TYPE0))
        return out

    def edge_type(self, i, j):
        if not self.adj_mat[i, j]:
            return None
        return TYPE1 if self.t1_mat[i, j] else TYPE0

    def n_edges(self, edge_type=None):
        if edge_type is None:
            total = int(self.adj_mat.sum())
        elif edge_type == TYPE1:
            total = int(self.t1_mat.sum())
        else:
            total = int(self.adj_mat.sum() - self.t1_mat.sum())
        return total // 2

    def masks(self):
        """(adj, t1) bitmask rows: bit j of adj[i] marks an edge {i, j}."""
        if self._masks is None:
            self._masks = (_pack_rows(self.adj_mat), _pack_rows(self.t1_mat))
        return self._masks

    def induced(self, vertex_ids):
        """Sub-product on the given vertices (sorted, reindexed)."""
        ids = sorted(vertex_ids)
        sel = np.ix_(ids, ids)
        return ProductGraph(
            tuple(self.pairs[i] for i in ids),
            tuple(self.vertex_labels[i] for i in ids),
            self.left, self.right,
            self.adj_mat[sel].copy(), self.t1_mat[sel].copy(),
        )

    def as_labeled_graph(self):
        """View of the product itself as a LabeledGraph; edge labels are the
        type tags.  Used for structural comparisons in tests."""
        edges = {(i, j): str(t) for i, j, t in self.edges()}
        return LabeledGraph(self.n, self.vertex_labels, edges)


def _pack_rows(mat):
    n = mat.shape[0]
    if n == 0:
        return []
    packed = np.packbits(mat, axis=1, bitorder="little")
    return [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]


def _code_labels(values_a, values_b, base=0):
    keys = sorted({label_key(v) for v in values_a} | {label_key(v) for v in values_b})
    code = {k: i + base for i, k in enumerate(keys)}
    return ([code[label_key(v)] for v in values_a],
            [code[label_key(v)] for v in values_b])


def _edge_code_matrix(g, coded):
    mat = np.zeros((g.n, g.n), dtype=np.int32)
    for idx, (u, v) in enumerate(g.edges()):
        mat[u, v] = coded[idx]
        mat[v, u] = coded[idx]
    return mat


def modular_product(left: LabeledGraph, right: LabeledGraph,
                    labeled: bool = True) -> ProductGraph:
    """Build the modular product of two labeled graphs.

    With labeled=False all vertex pairs appear and any edge/edge or
    non-edge/non-edge coordinate pair yields a product edge; with
    labeled=True vertex pairs need equal vertex labels and type-1 edges
    need equal edge labels on both factor edges.
    """
    if labeled:
        vl, vr = _code_labels(left.vertex_labels, right.vertex_labels)
        el, er = _code_labels(
            [left.edge_labels[e] for e in left.edges()],
            [right.edge_labels[e] for e in right.edges()],
            base=1,
        )
    else:
        vl = [0] * left.n
        vr = [0] * right.n
        el = [1] * left.n_edges
        er = [1] * right.n_edges
    e_left = _edge_code_matrix(left, el)
    e_right = _edge_code_matrix(right, er)

    pairs = [(u, v) for u in range(left.n) for v in range(right.n)
             if vl[u] == vr[v]]
    m = len(pairs)
    if m == 0:
        empty = np.zeros((0, 0), dtype=bool)
        return ProductGraph((), (), left, right, empty, empty.copy())

    us = np.fromiter((p[0] for p in pairs), dtype=np.int64, count=m)
    vs = np.fromiter((p[1] for p in pairs), dtype=np.int64, count=m)
    le = e_left[np.ix_(us, us)]
    re = e_right[np.ix_(vs, vs)]
    distinct = (us[:, None] != us[None, :]) & (vs[:, None] != vs[None, :])
    adj = distinct & (le == re)
    t1 = adj & (le != 0)
    np.fill_diagonal(adj, False)
    np.fill_diagonal(t1, False)

    if labeled:
        vlabels = tuple(left.vertex_labels[u] for u, _ in pairs)
    else:
        vlabels = (UNLABELED,) * m
    return ProductGraph(tuple(pairs), vlabels, left, right, adj, t1)


def type_a_components(p: ProductGraph):
    """Sub-products induced by the type-1 connected vertex classes.

    Every type-0 edge between two vertices of the same class is retained;
    classes are ordered by smallest vertex id and their union covers V(p).
    """
    n = p.n
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for u in np.nonzero(p.t1_mat[v])[0].tolist():
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(p.induced(comp))
    return comps


def prune_type0_edges(p: ProductGraph, path_cap: int = 6) -> ProductGraph:
    """Drop type-0 edges that provably cannot appear in any type-1
    connected clique.

    Members of a clique differ pairwise in both coordinates, so a type-1
    path inside a clique projects to a simple path on each factor, which
    caps its length at min(|V(left)|, |V(right)|) - 1 edges; type-1
    adjacency already forces the two projections to carry equal labels.
    A type-0 edge is removed when no type-1 walk within the relevant
    length can connect its endpoints: the walk cap is the clique length
    bound when that is within path_cap, otherwise the number of product
    vertices (plain type-1 connectivity).  Reachability is computed with
    boolean matrix powers; uncertain edges stay, so the maximal type-1
    connected cliques of the result equal those of p.
    """
    if path_cap < 1:
        raise ValueError("path_cap must be >= 1")
    if p.n == 0:
        return p
    t0_upper = np.triu(p.adj_mat & ~p.t1_mat, 1)
    if not t0_upper.any():
        return p

    bound = min(p.left.n, p.right.n) - 1
    reach = np.eye(p.n, dtype=bool) | p.t1_mat
    if bound <= path_cap:
        for _ in range(bound - 1):
            grown = reach | (reach @ p.t1_mat)
            if (grown == reach).all():
                break
            reach = grown
    else:
        while True:  # doubling up to the type-1 component closure
            grown = reach @ reach
            if (grown == reach).all():
                break
            reach = grown

    removable = t0_upper & ~reach
    if not removable.any():
        return p
    adj = p.adj_mat & ~(removable | removable.T)
    return ProductGraph(p.pairs, p.vertex_labels, p.left, p.right,
                        adj, p.t1_mat)


def project(p: ProductGraph, vertex_ids, side: str) -> LabeledGraph:
    """Induced subgraph of one factor under the coordinate projection.

    side is "left" or "right".  Raises GraphError if two product vertices
    project to the same factor vertex (impossible for cliques).
    """
    sub, _ = project_with_map(p, vertex_ids, side)
    return sub


def project_with_map(p: ProductGraph, vertex_ids, side: str):
    """Like project but also returns {projected new id: product vertex id}."""
    if side not in ("left", "right"):
        raise GraphError(f"side must be 'left' or 'right', got {side!r}")
    coord = 0 if side == "left" else 1
    factor = p.left if side == "left" else p.right
    ids = sorted(vertex_ids)
    coords = [p.pairs[i][coord] for i in ids]
    if len(set(coords)) != len(coords):
        raise GraphError("projection collides: two vertices share a coordinate")
    sub, new_to_factor = induced_subgraph_with_map(factor, coords)
    factor_to_prod = {p.pairs[i][coord]: i for i in ids}
    return sub, {new: factor_to_prod[old] for new, old in new_to_factor.items()}
