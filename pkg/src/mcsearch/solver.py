"""Multi-graph maximum common subgraph pipeline.

The solve loop iterates pairwise modular products over a similarity-driven
ordering, carrying a deduplicated set of candidate common subgraphs from
stage to stage.  Every maximal clique's projection is retained (never just
the maximal common subgraphs, which would lose optima), candidates smaller
than an already realized full-depth solution can be discarded, and the
edge variant runs on line graphs with bad-triangle repair at every stage.
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .graph_core import (
    EMPTY_GRAPH,
    LabeledGraph,
    canonical,
    line_graph,
)
from .product import modular_product, project_with_map, type_a_components
from .clique import enumerate_maximal_cliques, enumerate_maximal_connected_cliques
from .similarity import MEASURES, greedy_order, similarity_matrix

log = logging.getLogger(__name__)

ORDERINGS = MEASURES + ("input", "random")


class SolveError(ValueError):
    pass


class SolveTimeout(RuntimeError):
    """Raised when the time limit expires; carries the best realized size."""

    def __init__(self, best_bound):
        super().__init__(f"time limit exceeded (best bound {best_bound})")
        self.best_bound = best_bound


@dataclass(frozen=True)
class SolveConfig:
    mode: str = "mvcs"            # "mvcs" or "mecs"
    connected: bool = False
    labeled: bool = True
    ordering: str = "minmax"      # one of ORDERINGS
    seed: int | None = None       # drives ordering="random"
    prune_type0: bool = True      # connected mode only
    path_cap: int = 6
    bound_pruning: bool = True
    time_limit: float | None = None
    parallelism: int = 1

    def validated(self) -> "SolveConfig":
        if self.mode not in ("mvcs", "mecs"):
            raise SolveError(f"mode must be 'mvcs' or 'mecs', got {self.mode!r}")
        if self.ordering not in ORDERINGS:
            raise SolveError(f"ordering must be one of {ORDERINGS}")
        if self.path_cap < 1:
            raise SolveError("path_cap must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise SolveError("time_limit must be positive")
        if self.parallelism < 1:
            raise SolveError("parallelism must be >= 1")
        return self


@dataclass(frozen=True)
class EmbeddingResult:
    """One maximum common subgraph with a witness per input graph.

    per_input_maps follows the original argument order: vertex-to-vertex
    maps in mvcs mode, edge-to-edge maps in mecs mode.  All results of one
    solve share the same maximum size (vertices or edges respectively).
    """

    subgraph: LabeledGraph
    size: int
    per_input_maps: tuple


@dataclass
class CandidateSet:
    """Deduplicated common subgraphs of the first `stage` processed inputs,
    each with one witness map per covered input."""

    representatives: list
    stage: int
    embeddings: list


@dataclass
class SolveStats:
    products_built: int = 0
    product_seconds: float = 0.0
    clique_seconds: float = 0.0
    cliques_enumerated: int = 0
    repair_splits: int = 0
    stage_candidates: list = field(default_factory=list)
    bound_final: int = 0


@dataclass
class SolveReport:
    results: list
    order: tuple          # processed original indices
    stats: SolveStats
    config: SolveConfig


@dataclass(frozen=True)
class _Cand:
    rep: LabeledGraph      # line-level graph in mecs mode
    maps: tuple            # per covered (processed) input: {rep vid: factor vid}
    key: bytes
    size: int
    source: LabeledGraph | None = None   # mecs: source-level reconstruction
    edge_of: tuple = ()                  # mecs: rep vid -> source-level edge


def repair_bad_triangles(members, type1_adjacent, preimage_edges):
    """Split cliques containing ambiguous line-graph triangles.

    members: clique vertex ids.  type1_adjacent(i, j) says whether two
    members are joined by a type-1 edge.  preimage_edges(m) returns, per
    covered input, the source edge behind member m.  Any type-1 triangle
    whose three source edges form a triangle in one input but a claw in
    another cannot be realized; the clique is replaced by its three
    subsets dropping one triangle vertex, recursively.  Consistent cliques
    come back unchanged.
    """
    members = tuple(sorted(members))
    bad = _first_bad_triangle(members, type1_adjacent, preimage_edges)
    if bad is None:
        return [members]
    out = []
    seen = set()
    for drop in bad:
        rest = tuple(m for m in members if m != drop)
        for fixed in repair_bad_triangles(rest, type1_adjacent, preimage_edges):
            if fixed not in seen:
                seen.add(fixed)
                out.append(fixed)
    return out


def _first_bad_triangle(members, type1_adjacent, preimage_edges):
    comps = []
    pending = list(members)
    while pending:
        v = pending.pop()
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for u in list(pending):
                if type1_adjacent(x, u):
                    pending.remove(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    for comp in sorted(comps):
        if len(comp) != 3:
            continue
        a, b, c = comp
        if not (type1_adjacent(a, b) and type1_adjacent(a, c)
                and type1_adjacent(b, c)):
            continue  # a type-1 path: its source preimage is unambiguous
        shapes = set()
        for edges in zip(*(preimage_edges(m) for m in comp)):
            endpoints = {v for e in edges for v in e}
            shapes.add(len(endpoints))  # 3 = triangle, 4 = claw
        if len(shapes) > 1:
            return (a, b, c)
    return None


class _Pipeline:
    def __init__(self, factors, deltas, config, deadline, stats, executor):
        self.factors = factors
        self.deltas = deltas          # per factor, mecs only (else None)
        self.cfg = config
        self.deadline = deadline
        self.stats = stats
        self.executor = executor
        self.mecs = config.mode == "mecs"
        self.bound = 0
        self.results: dict = {}
        self.visited: set = set()
        self.stats.stage_candidates = [0] * (len(factors) - 1)

    # -- candidate construction ---------------------------------------

    def empty_cand(self, covered):
        maps = tuple({} for _ in range(covered))
        if self.mecs:
            return _Cand(EMPTY_GRAPH, maps, canonical(EMPTY_GRAPH).data, 0,
                         EMPTY_GRAPH, ())
        return _Cand(EMPTY_GRAPH, maps, canonical(EMPTY_GRAPH).data, 0)

    def initial_cand(self):
        rep = self.factors[0]
        maps = ({v: v for v in range(rep.n)},)
        return self.finish_cand(rep, maps)

    def finish_cand(self, rep, maps):
        if not self.mecs:
            return _Cand(rep, maps, canonical(rep).data, rep.n)
        source, edge_of = self.rebuild_source(rep, maps)
        return _Cand(rep, maps, canonical(source).data, rep.n,
                     source, edge_of)

    def rebuild_source(self, rep, maps):
        """Source-level graph behind a line-level candidate, taken through
        the first covered input.  Deduplication must happen at source
        level: a line-level triangle says nothing about whether it means a
        triangle or a claw, and conflating the two loses solutions."""
        if rep.n == 0:
            return EMPTY_GRAPH, ()
        delta0 = self.deltas[0]
        src = self.factors[0].source  # type: ignore[attr-defined]
        edges = [delta0[maps[0][x]] for x in range(rep.n)]
        vs = sorted({v for e in edges for v in e})
        pos = {v: i for i, v in enumerate(vs)}
        elabels = {}
        edge_of = []
        for (u, v) in edges:
            a, b = pos[u], pos[v]
            key = (a, b) if a < b else (b, a)
            elabels[key] = src.edge_labels[(u, v)]
            edge_of.append(key)
        graph = LabeledGraph(len(vs), [src.vertex_labels[v] for v in vs],
                             elabels)
        return graph, tuple(edge_of)

    # -- one stage ------------------------------------------------------

    def expand(self, cand, stage):
        """All deduplicated candidates over cand x factors[stage]."""
        self.check_deadline()
        covered = len(cand.maps) + 1
        if cand.size == 0:
            return [self.empty_cand(covered)]
        factor = self.factors[stage]
        lb = self.bound if self.cfg.bound_pruning else 0

        t0 = time.perf_counter()
        prod = modular_product(cand.rep, factor, labeled=True)
        self.stats.products_built += 1
        self.stats.product_seconds += time.perf_counter() - t0

        if prod.n == 0:
            return [self.empty_cand(covered)]

        t0 = time.perf_counter()
        if self.cfg.connected:
            prune_bound = 0
            if self.cfg.prune_type0:
                # sound only up to the clique length cap; skipped when the
                # configured path cap cannot reach it
                bound = min(cand.rep.n, factor.n) - 1
                if bound <= self.cfg.path_cap:
                    prune_bound = bound
            comps = [c for c in type_a_components(prod) if c.n >= max(lb, 1)]
            if self.executor is not None and len(comps) > 1:
                clique_sets = list(self.executor.map(
                    lambda c: enumerate_maximal_connected_cliques(
                        c, lb, self.deadline, prune_bound=prune_bound), comps))
            else:
                clique_sets = [enumerate_maximal_connected_cliques(
                    c, lb, self.deadline, prune_bound=prune_bound)
                    for c in comps]
            found = [(comp, cl.members)
                     for comp, cliques in zip(comps, clique_sets)
                     for cl in cliques]
        else:
            found = [(prod, cl.members)
                     for cl in enumerate_maximal_cliques(prod, lb, self.deadline)]
        self.stats.clique_seconds += time.perf_counter() - t0
        self.stats.cliques_enumerated += len(found)

        out = []
        seen = set()
        for comp, members in found:
            member_sets = [members]
            if self.mecs:
                member_sets = self.repair(comp, members, cand)
            for ms in member_sets:
                if lb and len(ms) < lb:
                    continue
                child = self.project_cand(comp, ms, cand)
                if child.key not in seen:
                    seen.add(child.key)
                    out.append(child)
        if not out and lb == 0:
            return [self.empty_cand(covered)]
        self.stats.stage_candidates[stage - 1] += len(out)
        return out

    def repair(self, comp, members, cand):
        def t1_adjacent(i, j):
            return bool(comp.t1_mat[i, j])

        def preimages(m):
            a, b = comp.pairs[m]
            line_vids = [mp[a] for mp in cand.maps] + [b]
            return tuple(self.deltas[i][lv] for i, lv in enumerate(line_vids))

        fixed = repair_bad_triangles(members, t1_adjacent, preimages)
        if len(fixed) > 1 or fixed[0] != tuple(sorted(members)):
            self.stats.repair_splits += 1
            if any(len(ms) < len(members) - 1 for ms in fixed):
                log.debug("bad-triangle repair cascaded on clique %s", members)
        return fixed

    def project_cand(self, comp, members, cand):
        rep, new_to_prod = project_with_map(comp, members, "right")
        maps = []
        for mp in cand.maps:
            maps.append({nv: mp[comp.pairs[pv][0]]
                         for nv, pv in new_to_prod.items()})
        maps.append({nv: comp.pairs[pv][1] for nv, pv in new_to_prod.items()})
        return self.finish_cand(rep, tuple(maps))

    # -- drivers ----------------------------------------------------------

    def run(self):
        n = len(self.factors)
        init = self.initial_cand()
        if n == 1:
            self.record(init)
            return
        self.descend(init, 1)

    def descend(self, cand, stage):
        if stage == len(self.factors):
            self.record(cand)
            return
        children = self.expand(cand, stage)
        children.sort(key=lambda c: (-c.size, c.key))
        for child in children:
            if self.cfg.bound_pruning and child.size < self.bound:
                continue
            token = (stage, child.key)
            if token in self.visited:
                continue
            self.visited.add(token)
            self.descend(child, stage + 1)

    def record(self, cand):
        if cand.key not in self.results:
            self.results[cand.key] = cand
        if cand.size > self.bound:
            self.bound = cand.size

    def check_deadline(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise TimeoutError("solve deadline exceeded")


class _LineFactor(LabeledGraph):
    """Line graph that remembers its source graph (mecs bookkeeping)."""

    __slots__ = ("source",)

    def __init__(self, lg, source):
        super().__init__(lg.n, lg.vertex_labels, lg.edge_labels, name=lg.name)
        self.source = source


def _resolve_order(graphs, config):
    n = len(graphs)
    if config.ordering == "input":
        return tuple(range(n))
    if config.ordering == "random":
        rng = random.Random(config.seed)
        order = list(range(n))
        rng.shuffle(order)
        return tuple(order)
    matrix = similarity_matrix(graphs, config.ordering, mode=config.mode)
    return greedy_order(matrix).sequence


def solve_detailed(graphs, config: SolveConfig) -> SolveReport:
    """Full pipeline run returning results plus per-phase statistics."""
    config = config.validated()
    graphs = list(graphs)
    if len(graphs) < 2:
        raise SolveError("need at least 2 input graphs")
    deadline = None
    if config.time_limit is not None:
        deadline = time.monotonic() + config.time_limit

    work = graphs if config.labeled else [g.stripped() for g in graphs]
    order = _resolve_order(work, config)
    ordered = [work[i] for i in order]

    if config.mode == "mecs":
        factors = []
        deltas = []
        for g in ordered:
            lr = line_graph(g)
            factors.append(_LineFactor(lr.line_graph, g))
            deltas.append(lr.delta)
    else:
        factors = ordered
        deltas = None

    stats = SolveStats()
    executor = None
    if config.parallelism > 1:
        executor = ThreadPoolExecutor(max_workers=config.parallelism)
    try:
        pipe = _Pipeline(factors, deltas, config, deadline, stats, executor)
        try:
            pipe.run()
        except TimeoutError:
            raise SolveTimeout(pipe.bound) from None
    finally:
        if executor is not None:
            executor.shutdown(wait=False)

    stats.bound_final = pipe.bound
    best = max(c.size for c in pipe.results.values())
    winners = sorted((c for c in pipe.results.values() if c.size == best),
                     key=lambda c: c.key)

    results = []
    inverse = {pos: orig for pos, orig in enumerate(order)}
    for cand in winners:
        if config.mode == "mecs":
            subgraph = cand.source
            per_input = [None] * len(graphs)
            for pos, mp in enumerate(cand.maps):
                per_input[inverse[pos]] = {
                    cand.edge_of[x]: deltas[pos][mp[x]] for x in range(cand.rep.n)
                }
        else:
            subgraph = cand.rep
            per_input = [None] * len(graphs)
            for pos, mp in enumerate(cand.maps):
                per_input[inverse[pos]] = dict(mp)
        results.append(EmbeddingResult(subgraph, cand.size, tuple(per_input)))
    return SolveReport(results, order, stats, config)


def solve(graphs, config: SolveConfig) -> list:
    """All maximum common subgraphs of the inputs, one EmbeddingResult per
    isomorphism class, sorted canonically.

    The result set does not depend on the configured ordering, pruning or
    parallelism; those only affect runtime.  The empty graph is a valid
    answer when nothing larger is common.  Raises SolveTimeout when
    config.time_limit expires.
    """
    return solve_detailed(graphs, config).results


def solve_with_bound(graphs, config: SolveConfig) -> list:
    """solve() with depth-first bound pruning forced on; results identical
    to the unpruned run."""
    if not config.bound_pruning:
        config = replace(config, bound_pruning=True)
    return solve(graphs, config)


def initial_candidates(first: LabeledGraph) -> CandidateSet:
    """Stage-1 candidate set: the first graph itself."""
    return CandidateSet([first], 1, [({v: v for v in range(first.n)},)])


def step(candidates: CandidateSet, next_graph: LabeledGraph,
         config: SolveConfig) -> CandidateSet:
    """One pipeline stage: product every candidate with the next graph,
    enumerate maximal (connected, if configured) cliques, project onto the
    new factor and deduplicate by canonical form.

    This is the vertex-level stage operation; solve() wraps it with the
    line-graph transform and triangle repair for mecs mode.
    """
    config = config.validated()
    if not candidates.representatives:
        raise SolveError("candidate set is empty")
    cfg = replace(config, mode="mvcs", bound_pruning=False)
    stats = SolveStats()
    pipe = _Pipeline([EMPTY_GRAPH, next_graph], None, cfg, None, stats, None)
    merged = []
    seen = set()
    for rep, maps in zip(candidates.representatives, candidates.embeddings):
        cand = _Cand(rep, tuple(maps), canonical(rep).data, rep.n)
        for child in pipe.expand(cand, 1):
            if child.key not in seen:
                seen.add(child.key)
                merged.append(child)
    return CandidateSet([c.rep for c in merged], candidates.stage + 1,
                        [c.maps for c in merged])
