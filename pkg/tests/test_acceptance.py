"""Acceptance suite: one test per exit criterion, each printing a PASS line
with its measured numbers (run with -s to see them for passing tests).

The random-instance suites are seeded and shared across criteria through
module-scoped fixtures, so the whole file is deterministic.
"""

import itertools
import math
import random
import time
from collections import defaultdict
from dataclasses import replace

import pytest

from mcsearch.bench import bench_orderings, bucket_indices, pairwise_stats
from mcsearch.clique import backend_name
from mcsearch.generator import generate_corpus, generate_instances
from mcsearch.graph_core import canonical
from mcsearch.oracle import oracle_mecs, oracle_mvcs
from mcsearch.solver import SolveConfig, solve

from conftest import claw, k3, random_graph
from test_solver import TestAppendixCaution, classes_of

MODE_COMBOS = [(mode, connected, labeled)
               for mode in ("mvcs", "mecs")
               for connected in (False, True)
               for labeled in (True, False)]

SPEEDUP_ATOMS = ("C",) * 7 + ("N",)   # skewed composition: products stay large
SPEEDUP_BONDS = ("1", "2")
SPEEDUP_SEED = 31
SPEEDUP_INSTANCES = 50


@pytest.fixture(scope="module")
def suite_200():
    """200 random instances of 2..5 graphs, <= 8 vertices and <= 9 edges
    each (within both oracle caps)."""
    rng = random.Random(20240601)
    instances = []
    while len(instances) < 200:
        graphs = [random_graph(rng, max_n=8, max_edges=9)
                  for _ in range(rng.randint(2, 5))]
        if all(g.n_edges <= 9 for g in graphs):
            instances.append(graphs)
    return instances


@pytest.fixture(scope="module")
def solved_200(suite_200):
    """Baseline solve() classes for every instance and mode combination."""
    out = []
    for graphs in suite_200:
        per_combo = {}
        for mode, connected, labeled in MODE_COMBOS:
            cfg = SolveConfig(mode=mode, connected=connected, labeled=labeled,
                              ordering="input")
            res = solve(graphs, cfg)
            per_combo[(mode, connected, labeled)] = (
                res[0].size, classes_of(res))
        out.append(per_combo)
    return out


def _geomean(xs):
    return math.exp(sum(math.log(x) for x in xs) / len(xs))


def test_oracle_exactness(suite_200, solved_200):
    """solve() equals the brute-force oracles exactly on all 200 instances
    and all 8 mode combinations."""
    started = time.time()
    checked = 0
    for graphs, solved in zip(suite_200, solved_200):
        for (mode, connected, labeled), (size, classes) in solved.items():
            oracle = oracle_mvcs if mode == "mvcs" else oracle_mecs
            want = oracle(graphs, connected=connected, labeled=labeled)
            assert size == want.max_size, (mode, connected, labeled)
            assert classes == list(want.classes), (mode, connected, labeled)
            checked += 1
    print(f"ACCEPT oracle-exactness: PASS "
          f"({checked} solve/oracle comparisons in {time.time() - started:.0f}s)")


def test_order_invariance():
    """All 24 input permutations produce identical canonical result sets on
    20 seeded 4-graph instances."""
    rng = random.Random(777)
    for trial in range(20):
        graphs = [random_graph(rng, max_n=6) for _ in range(4)]
        mode = "mvcs" if trial % 2 == 0 else "mecs"
        if mode == "mecs" and any(g.n_edges > 9 for g in graphs):
            mode = "mvcs"
        cfg = SolveConfig(mode=mode, connected=trial % 3 == 0,
                          ordering="input")
        ref = classes_of(solve(graphs, cfg))
        for perm in itertools.permutations(range(4)):
            got = classes_of(solve([graphs[i] for i in perm], cfg))
            assert got == ref, (trial, perm)
    print("ACCEPT order-invariance: PASS (20 instances x 24 permutations)")


def test_pruning_neutrality(suite_200, solved_200):
    """Type-0 removal on/off and bound pruning on/off leave the result set
    unchanged on the 200-instance suite."""
    for graphs, solved in zip(suite_200, solved_200):
        for (mode, connected, labeled), (size, classes) in solved.items():
            base = SolveConfig(mode=mode, connected=connected,
                               labeled=labeled, ordering="input")
            for variant in (replace(base, prune_type0=not base.prune_type0),
                            replace(base, bound_pruning=not base.bound_pruning)):
                res = solve(graphs, variant)
                assert res[0].size == size
                assert classes_of(res) == classes
    print("ACCEPT pruning-neutrality: PASS "
          "(type-0 removal and bound pruning toggled on 200 instances)")


def test_delta_y_correctness():
    """Triangle vs claw in connected edge mode: exactly one class, the
    2-edge path."""
    cfg = SolveConfig(mode="mecs", connected=True, labeled=False,
                      ordering="input")
    res = solve([k3(), claw()], cfg)
    assert len(res) == 1
    assert res[0].size == 2
    assert res[0].subgraph.n == 3 and res[0].subgraph.n_edges == 2
    want = oracle_mecs([k3(), claw()], connected=True, labeled=False)
    assert want.max_size == 2
    assert classes_of(res) == list(want.classes)
    print("ACCEPT delta-y: PASS (one class, the 2-edge path, oracle agrees)")


def test_ordering_speedup():
    """Minmax ordering at most half the input/random geomean runtime, and
    every measure's removal variant at most its no-removal counterpart."""
    started = time.time()
    instances = generate_instances(SPEEDUP_INSTANCES, 5, (18, 22),
                                   atoms=SPEEDUP_ATOMS, bonds=SPEEDUP_BONDS,
                                   seed=SPEEDUP_SEED)
    base = SolveConfig(mode="mecs", connected=True, labeled=True,
                       time_limit=300)
    rows = bench_orderings(instances, base, include_baselines=True,
                           seed=0, repeats=3)
    assert all(r["timed_out"] == "0" for r in rows)
    times = defaultdict(list)
    for r in rows:
        times[(r["measure"], r["prune"])].append(float(r["runtime_seconds"]))
    g = {k: _geomean(v) for k, v in times.items()}

    ratios = {}
    for measure in ("vh", "wl", "nspd", "minmax"):
        ratios[measure] = g[(measure, "1")] / g[(measure, "0")]
        assert ratios[measure] <= 1.0, (
            f"{measure}: removal variant slower "
            f"({g[(measure, '1')]:.3f}s vs {g[(measure, '0')]:.3f}s geomean)")
    vs_input = g[("minmax", "1")] / g[("input", "1")]
    vs_random = g[("minmax", "1")] / g[("random", "1")]
    assert vs_input <= 0.5, f"minmax/input geomean ratio {vs_input:.2f} > 0.5"
    assert vs_random <= 0.5, f"minmax/random geomean ratio {vs_random:.2f} > 0.5"
    print(f"ACCEPT ordering-speedup: PASS (backend={backend_name()}, "
          f"minmax/input={vs_input:.2f}, minmax/random={vs_random:.2f}, "
          f"removal ratios=" +
          ", ".join(f"{m}={ratios[m]:.3f}" for m in ratios) +
          f", harness {time.time() - started:.0f}s)")


def test_similarity_count_correlation():
    """Each normalized measure ranks pairs consistently with their maximal
    connected clique counts (Spearman > 0.3 over 300 pairs)."""
    from scipy.stats import spearmanr

    started = time.time()
    corpus = generate_corpus(25, (10, 14), seed=1)   # 25 graphs -> 300 pairs
    stats = pairwise_stats(corpus, ("vh", "wl", "nspd", "minmax"),
                           mode="mecs")
    assert len(stats) == 300
    counts = [s[3] for s in stats]
    rhos = {}
    for measure in ("vh", "wl", "nspd", "minmax"):
        rho = float(spearmanr([s[2][measure] for s in stats],
                              counts).statistic)
        rhos[measure] = rho
        assert rho > 0.3, f"{measure}: Spearman {rho:.3f} <= 0.3"
    print("ACCEPT similarity-correlation: PASS (" +
          ", ".join(f"{m}={rhos[m]:.3f}" for m in rhos) +
          f", {time.time() - started:.0f}s)")


def test_bucket_math():
    """Window membership at bucket boundaries follows the closed interval
    of half-width 0.005 exactly."""
    assert bucket_indices(0.5) == list(range(495, 506))
    assert bucket_indices(0.505) == list(range(500, 511))
    assert bucket_indices(0.4949) == list(range(490, 500))
    assert bucket_indices(0.495) == list(range(490, 501))
    assert bucket_indices(0.0) == [1, 2, 3, 4, 5]
    assert bucket_indices(1.0) == list(range(995, 1001))
    assert bucket_indices(0.0005) == [1, 2, 3, 4, 5]
    print("ACCEPT bucket-math: PASS (closed-window boundary cases exact)")


def test_appendix_caution():
    """A maximal product clique projecting onto a non-maximal common
    subgraph stays in the candidate stream; the final answer matches the
    oracle."""
    TestAppendixCaution().test_non_maximal_projections_are_retained()
    print("ACCEPT appendix-caution: PASS "
          "(non-maximal projection retained, oracle matched)")
