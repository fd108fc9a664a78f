"""Pairwise graph similarity measures and the greedy input ordering.

Three kernel-style measures (vertex histogram, Weisfeiler-Lehman optimal
assignment, neighborhood subgraph pairwise distance) plus the minmax
measure built from the modular product itself.  All are normalized to
[0, 1]; positive semi-definiteness is not required anywhere.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .graph_core import LabeledGraph, canonical, induced_subgraph, label_key, line_graph
from .product import modular_product

MEASURES = ("vh", "wl", "nspd", "minmax")

WL_ITERATIONS = 3
NSPD_MAX_RADIUS = 2
NSPD_MAX_DISTANCE = 3


def _cosine(raw, self_a, self_b):
    if self_a == 0 or self_b == 0:
        # empty-graph convention: alike only when both are empty
        return 1.0 if self_a == self_b else 0.0
    return raw / math.sqrt(self_a * self_b)


def _dot(ca: Counter, cb: Counter) -> float:
    if len(cb) < len(ca):
        ca, cb = cb, ca
    return float(sum(v * cb.get(k, 0) for k, v in ca.items()))


def vh_kernel(a: LabeledGraph, b: LabeledGraph) -> float:
    """Cosine-normalized dot product of vertex-label histograms."""
    ha = Counter(a.vertex_labels)
    hb = Counter(b.vertex_labels)
    return _cosine(_dot(ha, hb), _dot(ha, ha), _dot(hb, hb))


def _wl_histograms(g: LabeledGraph, iterations: int):
    colors = [label_key(l) for l in g.vertex_labels]
    hists = [Counter(colors)]
    for _ in range(iterations):
        colors = [
            (colors[v], tuple(sorted(
                (label_key(lab), colors[u]) for u, lab in g.neighbors(v).items())))
            for v in range(g.n)
        ]
        hists.append(Counter(colors))
    return hists


def wl_oa_kernel(a: LabeledGraph, b: LabeledGraph,
                 iterations: int = WL_ITERATIONS) -> float:
    """Optimal-assignment value over the Weisfeiler-Lehman label hierarchy.

    With the hierarchy induced by 0..iterations refinement rounds the
    optimal assignment reduces to summed histogram intersections, one per
    round; edge labels take part in the refinement signatures.
    """
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    ha = _wl_histograms(a, iterations)
    hb = _wl_histograms(b, iterations)
    raw = sum(sum(min(h1[k], h2[k]) for k in h1.keys() & h2.keys())
              for h1, h2 in zip(ha, hb))
    return _cosine(float(raw), float((iterations + 1) * a.n),
                   float((iterations + 1) * b.n))


def _bfs_distances(g: LabeledGraph, start: int, limit: int):
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier and d < limit:
        d += 1
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def _nspd_features(g: LabeledGraph, max_radius: int, max_distance: int):
    balls = {}
    for v in range(g.n):
        dist = _bfs_distances(g, v, max_radius)
        for r in range(max_radius + 1):
            members = sorted(u for u, d in dist.items() if d <= r)
            ball = induced_subgraph(g, members)
            root_pos = members.index(v)
            marked = LabeledGraph(
                ball.n,
                [("@", lab) if i == root_pos else lab
                 for i, lab in enumerate(ball.vertex_labels)],
                ball.edge_labels,
            )
            balls[(v, r)] = canonical(marked).data
    feats: Counter = Counter()
    for v in range(g.n):
        dist = _bfs_distances(g, v, max_distance)
        for u, d in dist.items():
            if u < v:
                continue
            for r in range(max_radius + 1):
                pa, pb = balls[(v, r)], balls[(u, r)]
                if pb < pa:
                    pa, pb = pb, pa
                feats[(r, d, pa, pb)] += 1
    return feats


def nspd_kernel(a: LabeledGraph, b: LabeledGraph,
                max_radius: int = NSPD_MAX_RADIUS,
                max_distance: int = NSPD_MAX_DISTANCE) -> float:
    """Neighborhood subgraph pairwise distance kernel, cosine-normalized.

    A feature counts one pair of root-marked radius-r neighborhood
    subgraphs at shortest-path distance d, for every r <= max_radius and
    d <= max_distance; matching uses exact canonical forms.
    """
    if max_radius < 0 or max_distance < 0:
        raise ValueError("max_radius and max_distance must be >= 0")
    fa = _nspd_features(a, max_radius, max_distance)
    fb = _nspd_features(b, max_radius, max_distance)
    return _cosine(_dot(fa, fb), _dot(fa, fa), _dot(fb, fb))


def minmax_similarity(a: LabeledGraph, b: LabeledGraph,
                      mode: str = "mvcs") -> float:
    """Largest type-1 connected chunk of the modular product, normalized.

    In mecs mode the product is taken over the line graphs.  The
    normalizer is the vertex-count bound of the product, so the value
    stays in [0, 1] even when label filtering shrinks the vertex set.
    """
    if mode not in ("mvcs", "mecs"):
        raise ValueError(f"mode must be 'mvcs' or 'mecs', got {mode!r}")
    fa, fb = a, b
    if mode == "mecs":
        fa = line_graph(a).line_graph
        fb = line_graph(b).line_graph
    denom = fa.n * fb.n
    if denom == 0:
        return 1.0 if fa.n == fb.n else 0.0
    p = modular_product(fa, fb, labeled=True)
    if p.n == 0:
        return 0.0
    best = 0
    seen = [False] * p.n
    for start in range(p.n):
        if seen[start]:
            continue
        seen[start] = True
        size = 1
        stack = [start]
        while stack:
            v = stack.pop()
            for u in p.t1_mat[v].nonzero()[0].tolist():
                if not seen[u]:
                    seen[u] = True
                    size += 1
                    stack.append(u)
        best = max(best, size)
    return best / denom


_MEASURE_FUNCS = {
    "vh": lambda a, b, mode: vh_kernel(a, b),
    "wl": lambda a, b, mode: wl_oa_kernel(a, b),
    "nspd": lambda a, b, mode: nspd_kernel(a, b),
    "minmax": minmax_similarity,
}


@dataclass(frozen=True)
class SimilarityMatrix:
    """Symmetric pairwise similarity values in [0, 1]; the diagonal is
    fixed at 1.0 by convention (it never drives the ordering)."""

    n: int
    values: tuple
    measure: str

    def __getitem__(self, ij):
        i, j = ij
        return self.values[i][j]


def similarity_matrix(graphs, measure: str, mode: str = "mvcs") -> SimilarityMatrix:
    """Fill the pairwise matrix for one measure."""
    if measure not in _MEASURE_FUNCS:
        raise ValueError(f"unknown measure {measure!r}; pick one of {MEASURES}")
    graphs = list(graphs)
    n = len(graphs)
    func = _MEASURE_FUNCS[measure]
    vals = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = float(func(graphs[i], graphs[j], mode))
            vals[i][j] = v
            vals[j][i] = v
    return SimilarityMatrix(n, tuple(tuple(row) for row in vals), measure)


@dataclass(frozen=True)
class Ordering:
    """Greedy processing order plus the per-step max-similarity trace."""

    sequence: tuple
    measure: str
    trace: tuple = field(default=())


def greedy_order(matrix: SimilarityMatrix) -> Ordering:
    """Order the inputs so each new graph is as dissimilar as possible
    from everything already chosen.

    Starts from the pair with minimum similarity, then repeatedly appends
    the graph minimizing the maximum similarity to the chosen prefix.
    Ties break toward smaller indices.
    """
    n = matrix.n
    if n < 2:
        raise ValueError("need at least 2 graphs to order")
    best_pair = min(((matrix[i, j], i, j)
                     for i in range(n) for j in range(i + 1, n)))
    _, i0, j0 = best_pair
    chosen = [i0, j0]
    trace = [matrix[i0, j0]]
    remaining = [k for k in range(n) if k not in (i0, j0)]
    while remaining:
        scored = [(max(matrix[k, c] for c in chosen), k) for k in remaining]
        score, pick = min(scored)
        chosen.append(pick)
        trace.append(score)
        remaining.remove(pick)
    return Ordering(tuple(chosen), matrix.measure, tuple(trace))
