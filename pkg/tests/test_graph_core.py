import itertools
import random

import pytest

from mcsearch.graph_core import (
    GraphError,
    LabeledGraph,
    canonical,
    canonical_with_order,
    connected_components,
    induced_subgraph,
    is_connected,
    line_graph,
)

from conftest import claw, k3, lg, p3, random_graph, random_permutation, ug


class TestLabeledGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            ug(2, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphError):
            LabeledGraph(2, "CC", [(0, 1, "1"), (1, 0, "2")])

    def test_rejects_dangling_endpoint(self):
        with pytest.raises(GraphError):
            ug(2, [(0, 5)])

    def test_label_counts_must_match(self):
        with pytest.raises(GraphError):
            LabeledGraph(3, "CC", [])

    def test_equality_is_structural(self):
        assert k3() == k3()
        assert k3() != p3()

    def test_relabeled_preserves_structure(self):
        g = lg("CNO", {(0, 1): "1", (1, 2): "2"})
        h = g.relabeled([2, 0, 1])
        assert h.vertex_labels[2] == "C"
        assert h.edge_label(2, 0) == "1"


class TestLineGraph:
    def test_triangle_maps_to_triangle(self):
        lgr = line_graph(k3())
        assert lgr.line_graph.n == 3
        assert lgr.line_graph.n_edges == 3

    def test_claw_maps_to_triangle(self):
        lgr = line_graph(claw())
        assert lgr.line_graph.n == 3
        assert lgr.line_graph.n_edges == 3
        # the two are indistinguishable at line level
        assert canonical(lgr.line_graph) == canonical(line_graph(k3()).line_graph)

    def test_path_maps_to_edge(self):
        lgr = line_graph(p3())
        assert lgr.line_graph.n == 2
        assert lgr.line_graph.n_edges == 1

    def test_empty_graph(self):
        lgr = line_graph(ug(0, []))
        assert lgr.line_graph.n == 0
        assert lgr.delta == ()

    def test_isolated_vertices_vanish(self):
        g = ug(4, [(0, 1)])
        assert line_graph(g).line_graph.n == 1

    def test_delta_edges_share_one_endpoint(self, rng):
        for _ in range(50):
            g = random_graph(rng, max_n=8)
            lgr = line_graph(g)
            for (a, b) in lgr.line_graph.edges():
                shared = set(lgr.delta[a]) & set(lgr.delta[b])
                assert len(shared) == 1

    def test_label_faithful(self, rng):
        # equal line labels exactly when (edge label, endpoint multiset) match
        for _ in range(50):
            g = random_graph(rng, max_n=8)
            lgr = line_graph(g)
            for a, b in itertools.combinations(range(lgr.line_graph.n), 2):
                ea, eb = lgr.delta[a], lgr.delta[b]
                sig = lambda e: (
                    g.edge_labels[e],
                    sorted([g.vertex_labels[e[0]], g.vertex_labels[e[1]]]),
                )
                same = sig(ea) == sig(eb)
                labels_equal = (lgr.line_graph.vertex_labels[a]
                                == lgr.line_graph.vertex_labels[b])
                assert same == labels_equal


class TestComponents:
    def test_disjoint_edges(self):
        g = ug(4, [(0, 1), (2, 3)])
        comps = connected_components(g)
        assert sorted(sorted(c) for c in comps) == [[0, 1], [2, 3]]

    def test_edge_filter_cuts_bridge(self):
        g = p3()
        comps = connected_components(g, lambda u, v, lab: {u, v} == {0, 1})
        assert sorted(sorted(c) for c in comps) == [[0, 1], [2]]

    def test_connected_graph_single_component(self, rng):
        for _ in range(30):
            g = random_graph(rng, max_n=7)
            comps = connected_components(g)
            assert is_connected(g) == (len(comps) <= 1)
            # cross-check with union-find
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for (u, v) in g.edges():
                parent[find(u)] = find(v)
            n_roots = len({find(v) for v in range(g.n)})
            assert n_roots == len(comps)


class TestInducedSubgraph:
    def test_complete_graph_restriction(self):
        sub = induced_subgraph(k3(), {0, 2})
        assert sub.n == 2 and sub.n_edges == 1

    def test_nonadjacent_pair(self):
        sub = induced_subgraph(p3(), {0, 2})
        assert sub.n == 2 and sub.n_edges == 0

    def test_identity(self):
        g = lg("CNO", {(0, 1): "1", (1, 2): "2"})
        assert induced_subgraph(g, range(3)) == g

    def test_unknown_vertex_rejected(self):
        with pytest.raises(GraphError):
            induced_subgraph(k3(), {0, 7})


class TestCanonical:
    def test_deterministic(self):
        g = lg("CNC", {(0, 1): "1", (1, 2): "1"})
        assert canonical(g) == canonical(g)

    def test_rotated_labeled_cycle(self):
        cycle = lg("CNCN", {(0, 1): "1", (1, 2): "1", (2, 3): "1", (0, 3): "1"})
        rotated = cycle.relabeled([2, 3, 0, 1])
        assert canonical(cycle) == canonical(rotated)

    def test_different_edge_counts_differ(self):
        assert canonical(k3()) != canonical(p3())

    def test_invariant_under_relabeling(self):
        rng = random.Random(1)
        for _ in range(500):
            g = random_graph(rng, max_n=7)
            perm = random_permutation(rng, g.n)
            assert canonical(g) == canonical(g.relabeled(perm))

    def test_distinguishes_non_isomorphic(self):
        rng = random.Random(2)
        checked = 0
        while checked < 500:
            a = random_graph(rng, max_n=7)
            b = random_graph(rng, max_n=7)
            if _brute_isomorphic(a, b):
                continue
            assert canonical(a) != canonical(b)
            checked += 1

    def test_order_realizes_certificate(self, rng):
        for _ in range(50):
            g = random_graph(rng, max_n=7)
            perm = random_permutation(rng, g.n)
            h = g.relabeled(perm)
            _, og = canonical_with_order(g)
            _, oh = canonical_with_order(h)
            mapping = {og[i]: oh[i] for i in range(g.n)}
            for (u, v) in g.edges():
                assert h.edge_label(mapping[u], mapping[v]) == g.edge_label(u, v)
            for v in range(g.n):
                assert h.vertex_labels[mapping[v]] == g.vertex_labels[v]

    def test_hard_symmetric_cases(self):
        # complete, complete bipartite and cycle graphs stress the search
        k5 = ug(5, list(itertools.combinations(range(5), 2)))
        assert canonical(k5) == canonical(k5.relabeled([4, 2, 0, 1, 3]))
        k33 = ug(6, [(i, j + 3) for i in range(3) for j in range(3)])
        assert canonical(k33) == canonical(k33.relabeled([5, 3, 4, 0, 2, 1]))
        c6 = ug(6, [(i, (i + 1) % 6) for i in range(6)])
        c3c3 = ug(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert canonical(c6) != canonical(c3c3)


def _brute_isomorphic(a, b):
    if a.n != b.n or a.n_edges != b.n_edges:
        return False
    if sorted(a.vertex_labels) != sorted(b.vertex_labels):
        return False
    for perm in itertools.permutations(range(b.n)):
        ok = True
        for v in range(a.n):
            if a.vertex_labels[v] != b.vertex_labels[perm[v]]:
                ok = False
                break
        if not ok:
            continue
        for u in range(a.n):
            for v in range(u + 1, a.n):
                la = a.edge_labels.get((u, v))
                x, y = sorted((perm[u], perm[v]))
                if la != b.edge_labels.get((x, y)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False
