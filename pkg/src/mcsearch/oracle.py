"""Brute-force reference implementations for desk-scale validation.

Everything here trades speed for being obviously correct: common
subgraphs come from exhaustive subset enumeration and isomorphism is
decided through canonical forms.  The edge-subset route in oracle_mecs
deliberately avoids line graphs so it can referee the solver's
line-graph pipeline from the outside.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph_core import (
    LabeledGraph,
    canonical,
    canonical_with_order,
    induced_subgraph_with_map,
    is_connected,
)

MAX_ORACLE_VERTICES = 9
MAX_ORACLE_EDGES = 9
MAX_ORACLE_PRODUCT = 20


class SizeLimitError(ValueError):
    """Input exceeds the size cap the brute-force search can afford."""


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive-search answer: maximum size, all optimal isomorphism
    classes (canonical bytes, sorted), one representative graph per class
    and one witness map per class per input."""

    max_size: int
    classes: tuple          # canonical byte strings
    class_graphs: tuple     # LabeledGraph per class
    witnesses: tuple        # per class: tuple over inputs of witness maps


def _iso_map(a: LabeledGraph, b: LabeledGraph):
    """Vertex bijection a -> b for isomorphic labeled graphs."""
    fa, oa = canonical_with_order(a)
    fb, ob = canonical_with_order(b)
    if fa != fb:
        raise ValueError("graphs are not isomorphic")
    return {oa[i]: ob[i] for i in range(a.n)}


def _vertex_catalog(g: LabeledGraph, size: int, connected: bool):
    """canon -> one inducing vertex subset, over induced subgraphs of the
    given vertex count."""
    out = {}
    for subset in combinations(range(g.n), size):
        sub, _ = induced_subgraph_with_map(g, subset)
        if connected and not is_connected(sub):
            continue
        out.setdefault(canonical(sub).data, subset)
    return out


def _edge_subgraph(g: LabeledGraph, edge_subset):
    """Non-induced subgraph spanned by the chosen edges; isolated vertices
    are dropped.  Returns (graph, {new id: original id})."""
    vs = sorted({v for e in edge_subset for v in e})
    pos = {v: i for i, v in enumerate(vs)}
    edges = {(pos[u], pos[v]): g.edge_labels[(u, v)] for (u, v) in edge_subset}
    sub = LabeledGraph(len(vs), [g.vertex_labels[v] for v in vs], edges)
    return sub, {i: v for v, i in pos.items()}


def _edge_catalog(g: LabeledGraph, size: int, connected: bool):
    out = {}
    for subset in combinations(g.edges(), size):
        sub, _ = _edge_subgraph(g, subset)
        if connected and not is_connected(sub):
            continue
        out.setdefault(canonical(sub).data, subset)
    return out


def _assemble(graphs, catalogs_at, size, rebuild):
    """Intersect per-graph catalogs at one size; None when empty."""
    catalogs = [catalogs_at(g, size) for g in graphs]
    common = set(catalogs[0])
    for cat in catalogs[1:]:
        common &= set(cat)
    if not common:
        return None
    classes = sorted(common)
    class_graphs = []
    witnesses = []
    for form in classes:
        rep, maps = rebuild(form, catalogs)
        class_graphs.append(rep)
        witnesses.append(maps)
    return OracleResult(size, tuple(classes), tuple(class_graphs),
                        tuple(witnesses))


def oracle_mvcs(graphs, connected: bool = False,
                labeled: bool = True) -> OracleResult:
    """Maximum-vertex common induced subgraphs by exhaustive enumeration.

    Every input must have at most MAX_ORACLE_VERTICES vertices.  Witness
    maps send representative vertices to input vertices.
    """
    graphs = list(graphs)
    for g in graphs:
        if g.n > MAX_ORACLE_VERTICES:
            raise SizeLimitError(
                f"graph with {g.n} vertices exceeds the oracle cap")
    work = graphs if labeled else [g.stripped() for g in graphs]

    def rebuild(form, catalogs):
        rep, _ = induced_subgraph_with_map(work[0], catalogs[0][form])
        maps = []
        for i, cat in enumerate(catalogs):
            sub, sub_map = induced_subgraph_with_map(work[i], cat[form])
            phi = _iso_map(rep, sub)
            maps.append({v: sub_map[phi[v]] for v in range(rep.n)})
        return rep, tuple(maps)

    top = min(g.n for g in work)
    for size in range(top, -1, -1):
        result = _assemble(work,
                           lambda g, s: _vertex_catalog(g, s, connected),
                           size, rebuild)
        if result is not None:
            return result
    raise AssertionError("size 0 always has the empty class")


def oracle_mecs(graphs, connected: bool = False,
                labeled: bool = True) -> OracleResult:
    """Maximum-edge common subgraphs by exhaustive edge-subset enumeration.

    Subgraphs here need not be induced: any edge subset spans a candidate,
    with isolated vertices ignored.  Every input must have at most
    MAX_ORACLE_EDGES edges.  Witness maps send representative edges to
    input edges.
    """
    graphs = list(graphs)
    for g in graphs:
        if g.n_edges > MAX_ORACLE_EDGES:
            raise SizeLimitError(
                f"graph with {g.n_edges} edges exceeds the oracle cap")
    work = graphs if labeled else [g.stripped() for g in graphs]

    def rebuild(form, catalogs):
        rep, _ = _edge_subgraph(work[0], catalogs[0][form])
        maps = []
        for i, cat in enumerate(catalogs):
            sub, sub_map = _edge_subgraph(work[i], cat[form])
            phi = _iso_map(rep, sub)
            emap = {}
            for (a, b) in rep.edges():
                x, y = sub_map[phi[a]], sub_map[phi[b]]
                emap[(a, b)] = (x, y) if x < y else (y, x)
            maps.append(emap)
        return rep, tuple(maps)

    top = min(g.n_edges for g in work)
    for size in range(top, -1, -1):
        result = _assemble(work,
                           lambda g, s: _edge_catalog(g, s, connected),
                           size, rebuild)
        if result is not None:
            return result
    raise AssertionError("size 0 always has the empty class")


def oracle_maximal_cliques(p, connected: bool = False,
                           maximality: str = "cclique"):
    """All maximal (optionally type-1 connected) cliques via exhaustive
    clique enumeration; independent of the search kernels.

    For connected mode, maximality="cclique" keeps cliques with no
    extension that stays type-1 connected; maximality="global" keeps only
    cliques that no vertex at all can extend.  Returns sorted member
    tuples.
    """
    if p.n > MAX_ORACLE_PRODUCT:
        raise SizeLimitError(f"product with {p.n} vertices exceeds the cap")
    if maximality not in ("cclique", "global"):
        raise ValueError(f"unknown maximality {maximality!r}")
    adj = [set() for _ in range(p.n)]
    t1 = [set() for _ in range(p.n)]
    for i in range(p.n):
        for j in range(p.n):
            if p.adj_mat[i, j]:
                adj[i].add(j)
                if p.t1_mat[i, j]:
                    t1[i].add(j)

    cliques = []

    def grow(cur, cand):
        for v in sorted(cand):
            nxt = cur + [v]
            cliques.append(nxt)
            grow(nxt, {u for u in cand if u > v and u in adj[v]})

    grow([], set(range(p.n)))

    def t1_connected(members):
        if len(members) <= 1:
            return True
        ms = set(members)
        seen = {members[0]}
        stack = [members[0]]
        while stack:
            v = stack.pop()
            for u in t1[v] & (ms - seen):
                seen.add(u)
                stack.append(u)
        return seen == ms

    out = []
    for members in cliques:
        ms = set(members)
        if connected:
            if not t1_connected(members):
                continue
            extenders = set.intersection(*(adj[v] for v in members)) - ms
            if maximality == "cclique":
                extenders = {w for w in extenders if t1[w] & ms}
            if extenders:
                continue
        else:
            if set.intersection(*(adj[v] for v in members)) - ms:
                continue
        out.append(tuple(members))
    return sorted(out)
