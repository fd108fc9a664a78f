"""Labeled-graph data model: line graphs, connectivity, canonical forms.

Graphs are simple and undirected, with one label per vertex (atom type) and
one label per edge (bond type).  Labels are opaque hashable symbols compared
only for equality; the distinguished symbol ``UNLABELED`` marks graphs where
labels carry no information.  All objects here are immutable after
construction and safe to share across worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Mapping

Label = Hashable

UNLABELED = "*"


class GraphError(ValueError):
    """Raised when graph construction or an operation violates an invariant."""


def label_key(label):
    """Deterministic, process-independent sort key for label symbols.

    Needed wherever labels must be ordered (canonical forms, path strings):
    plain tuple comparison would break on mixed types, and repr() of sets is
    hash-order dependent.
    """
    if isinstance(label, str):
        return (0, label)
    if isinstance(label, bool):
        return (1, "1" if label else "0")
    if isinstance(label, int):
        return (2, str(label))
    if isinstance(label, float):
        return (3, repr(label))
    if isinstance(label, bytes):
        return (4, label.decode("latin1"))
    if isinstance(label, tuple):
        return (5, tuple(label_key(x) for x in label))
    if isinstance(label, frozenset):
        return (6, tuple(sorted(label_key(x) for x in label)))
    return (9, repr(label))


class LabeledGraph:
    """Simple undirected graph with dense vertex ids 0..n-1.

    Parameters
    ----------
    n:
        Number of vertices.
    vertex_labels:
        Sequence of n label symbols.
    edges:
        Mapping ``{(u, v): label}`` or iterable of ``(u, v, label)`` triples.
        Pairs are unordered; self-loops and parallel edges are rejected.
    name:
        Optional identifier carried through serialization.
    """

    __slots__ = ("n", "vertex_labels", "edge_labels", "name",
                 "_nbrs", "_fp", "_canon")

    def __init__(self, n, vertex_labels, edges=(), name=None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        vertex_labels = tuple(vertex_labels)
        if len(vertex_labels) != n:
            raise GraphError(
                f"expected {n} vertex labels, got {len(vertex_labels)}")
        if isinstance(edges, Mapping):
            items = [(u, v, lab) for (u, v), lab in edges.items()]
        else:
            items = [(u, v, lab) for u, v, lab in edges]
        edge_labels = {}
        nbrs = [dict() for _ in range(n)]
        for u, v, lab in items:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) references unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in edge_labels:
                raise GraphError(f"duplicate edge {key}")
            edge_labels[key] = lab
            nbrs[u][v] = lab
            nbrs[v][u] = lab
        self.n = n
        self.vertex_labels = vertex_labels
        self.edge_labels = edge_labels
        self.name = name
        self._nbrs = tuple(nbrs)
        self._fp = (n, vertex_labels, tuple(sorted(edge_labels.items())))
        self._canon = None

    # -- basic accessors ---------------------------------------------------

    @property
    def n_edges(self):
        return len(self.edge_labels)

    def vertices(self):
        return range(self.n)

    def edges(self):
        """Sorted (u, v) pairs with u < v."""
        return sorted(self.edge_labels)

    def has_edge(self, u, v):
        return v in self._nbrs[u]

    def edge_label(self, u, v):
        return self._nbrs[u][v]

    def neighbors(self, v):
        """Mapping neighbor -> edge label (do not mutate)."""
        return self._nbrs[v]

    def degree(self, v):
        return len(self._nbrs[v])

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._fp == other._fp

    def __hash__(self):
        return hash(self._fp)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<LabeledGraph{tag} n={self.n} m={self.n_edges}>"

    # -- derived graphs ----------------------------------------------------

    def relabeled(self, perm):
        """Copy with vertex v renamed to perm[v] (perm is a permutation)."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        vl = [None] * self.n
        for v in range(self.n):
            vl[perm[v]] = self.vertex_labels[v]
        edges = {}
        for (u, v), lab in self.edge_labels.items():
            a, b = perm[u], perm[v]
            edges[(a, b) if a < b else (b, a)] = lab
        return LabeledGraph(self.n, vl, edges, name=self.name)

    def stripped(self):
        """Copy with every vertex and edge label replaced by UNLABELED."""
        edges = {e: UNLABELED for e in self.edge_labels}
        return LabeledGraph(self.n, [UNLABELED] * self.n, edges,
                            name=self.name)


EMPTY_GRAPH = LabeledGraph(0, [])


@dataclass(frozen=True)
class LineGraphResult:
    """Line graph plus the inverse map from its vertices to source edges."""

    line_graph: LabeledGraph
    delta: tuple  # line-graph vertex id -> (u, v) source edge


def line_graph(g: LabeledGraph) -> LineGraphResult:
    """Line graph of g: one vertex per edge, adjacency = shared endpoint.

    The label of a line vertex folds in all data a label-preserving edge
    match must respect: the source edge label plus the unordered pair of
    endpoint vertex labels.  The label of a line edge is the label of the
    shared source endpoint.  Isolated vertices of g leave no trace.
    """
    src_edges = g.edges()
    delta = tuple(src_edges)
    index = {e: i for i, e in enumerate(src_edges)}
    vlabels = []
    for (u, v) in src_edges:
        lu, lv = g.vertex_labels[u], g.vertex_labels[v]
        if label_key(lv) < label_key(lu):
            lu, lv = lv, lu
        vlabels.append((g.edge_labels[(u, v)], (lu, lv)))
    edges = {}
    # bucket edges by endpoint: two source edges are adjacent iff they share
    # exactly one endpoint (simple graph, so never two)
    incident = [[] for _ in range(g.n)]
    for e in src_edges:
        incident[e[0]].append(index[e])
        incident[e[1]].append(index[e])
    for w in range(g.n):
        ids = incident[w]
        shared_label = g.vertex_labels[w]
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                a, b = ids[i], ids[j]
                key = (a, b) if a < b else (b, a)
                edges[key] = shared_label
    lg = LabeledGraph(len(src_edges), vlabels, edges,
                      name=None if g.name is None else f"L({g.name})")
    return LineGraphResult(lg, delta)


def connected_components(g: LabeledGraph,
                         edge_filter: Callable[[int, int, Label], bool] | None = None):
    """Vertex sets of the components of g, using only edges passing the filter.

    Returns a list of sets partitioning V(g), ordered by smallest member.
    """
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u, lab in g.neighbors(v).items():
                if seen[u]:
                    continue
                if edge_filter is not None and not edge_filter(v, u, lab):
                    continue
                seen[u] = True
                comp.add(u)
                stack.append(u)
        comps.append(comp)
    return comps


def is_connected(g: LabeledGraph) -> bool:
    """True for graphs with at most one vertex or a single component."""
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: LabeledGraph, vs) -> LabeledGraph:
    """Induced subgraph of g on the vertex set vs, reindexed to dense ids.

    Vertices are renumbered in ascending order of their original ids; use
    induced_subgraph_with_map when the correspondence matters.
    """
    return induced_subgraph_with_map(g, vs)[0]


def induced_subgraph_with_map(g: LabeledGraph, vs):
    """Like induced_subgraph but also returns {new id: original id}."""
    order = sorted(set(vs))
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise GraphError(f"vertex set {order} not contained in 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(order)}
    edges = {}
    for i, v in enumerate(order):
        for u, lab in g.neighbors(v).items():
            j = pos.get(u)
            if j is not None and i < j:
                edges[(i, j)] = lab
    sub = LabeledGraph(len(order), [g.vertex_labels[v] for v in order], edges)
    return sub, {i: v for i, v in enumerate(order)}


# -- canonical forms -------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order-comparable fingerprint identifying a labeled graph up to
    isomorphism."""

    data: bytes


def _rank(values):
    """Replace values by their rank among the sorted distinct values.

    Ranks depend only on the values themselves, never on vertex order;
    this keeps every coloring step isomorphism-invariant.
    """
    ranking = {v: i for i, v in enumerate(sorted(set(values)))}
    return [ranking[v] for v in values]


def _partition_of(colors):
    """First-occurrence form, used only to compare partitions for equality."""
    seen = {}
    out = []
    for c in colors:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return out


def _refine(g, ecode, colors, nbr=None):
    """Iterative color refinement until the partition is stable.

    Signatures embed the previous color, so color classes only ever
    split; stability is reached exactly when the class count stops
    growing.
    """
    if nbr is None:
        nbr = _neighbor_codes(g, ecode)
    colors = list(colors)
    n_classes = len(set(colors))
    while True:
        sigs = [
            (colors[v],) + tuple(sorted((ec, colors[u]) for ec, u in nbr[v]))
            for v in range(g.n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranking) == n_classes:
            return colors
        n_classes = len(ranking)
        colors = [ranking[s] for s in sigs]


def _neighbor_codes(g, ecode):
    return [tuple((ecode[(min(v, u), max(v, u))], u) for u in g.neighbors(v))
            for v in range(g.n)]


def _cells(colors):
    by_color = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _cells_uniform(g, ecode, cells):
    """True when every within-cell and cross-cell vertex pair relates
    identically; then any cell-respecting ordering yields the same form."""
    for a, cell_a in enumerate(cells):
        for cell_b in cells[a:]:
            rel = None
            first = True
            for u in cell_a:
                for v in cell_b:
                    if u >= v and cell_a is cell_b:
                        continue
                    if u == v:
                        continue
                    r = ecode.get((min(u, v), max(u, v)))
                    if first:
                        rel, first = r, False
                    elif r != rel:
                        return False
    return True


def _certificate(g, ecode, order):
    pos = {v: i for i, v in enumerate(order)}
    vrow = tuple(g.vertex_labels[v] for v in order)
    erow = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v]), ec)
                 for (u, v), ec in ecode.items()))
    return (g.n, vrow, erow)


def _canon_search(g, ecode, colors, nbr):
    colors = _refine(g, ecode, colors, nbr)
    cells = _cells(colors)
    target = next((c for c in cells if len(c) > 1), None)
    if target is None:
        order = [v for _, v in sorted((colors[v], v) for v in range(g.n))]
        return _certificate(g, ecode, order), order
    if _cells_uniform(g, ecode, cells):
        order = [v for _, v in sorted((colors[v], v) for v in range(g.n))]
        return _certificate(g, ecode, order), order
    best = None
    best_order = None
    for v in target:
        child = [(c, 1) for c in colors]
        child[v] = (colors[v], 0)
        cert, order = _canon_search(g, ecode, _rank(child), nbr)
        if best is None or cert < best:
            best, best_order = cert, order
    return best, best_order


def canonical_with_order(g: LabeledGraph):
    """Canonical form plus one vertex ordering realizing it.

    The returned order lists original vertex ids by canonical position, so
    two isomorphic graphs can be aligned by matching positions.
    """
    if g._canon is None:
        ecode = {e: label_key(lab) for e, lab in g.edge_labels.items()}
        init = _rank([label_key(l) for l in g.vertex_labels])
        cert, order = _canon_search(g, ecode, init, _neighbor_codes(g, ecode))
        form = CanonicalForm(repr(cert).encode())
        g._canon = (form, tuple(order))
    return g._canon


def canonical(g: LabeledGraph) -> CanonicalForm:
    """Relabeling-invariant form: canonical(g) == canonical(h) iff g and h
    are isomorphic as labeled graphs."""
    return canonical_with_order(g)[0]
