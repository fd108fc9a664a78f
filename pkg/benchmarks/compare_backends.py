#!/usr/bin/env python3
"""Benchmark the compiled clique kernel against the pure-Python fallback.

Builds modular products from generated molecule-like graphs, runs both
kernels on identical inputs, verifies they agree and reports the timing
ratio.  Exits nonzero on any output mismatch.

Usage: python benchmarks/compare_backends.py [--pairs N] [--vertices LO:HI]
"""

import argparse
import sys
import time

from mcsearch import _cliquepy
from mcsearch.generator import generate_corpus
from mcsearch.graph_core import line_graph
from mcsearch.product import modular_product

try:
    from mcsearch import _cliquec
except ImportError:
    _cliquec = None


def build_products(pairs, lo, hi, seed):
    corpus = generate_corpus(2 * pairs, (lo, hi), seed=seed)
    products = []
    for i in range(pairs):
        a = line_graph(corpus[2 * i]).line_graph
        b = line_graph(corpus[2 * i + 1]).line_graph
        products.append(modular_product(a, b, labeled=True))
    return products


def run(kernel, products, connected):
    total = 0.0
    outputs = []
    for p in products:
        adj, t1 = p.masks()
        started = time.perf_counter()
        out = kernel.enumerate_cliques(p.n, adj, t1, connected, 0, None)
        total += time.perf_counter() - started
        outputs.append(out)
    return total, outputs


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=15)
    parser.add_argument("--vertices", default="14:18")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    if _cliquec is None:
        print("compiled kernel not built; nothing to compare")
        return 1

    lo, hi = (int(x) for x in args.vertices.split(":"))
    products = build_products(args.pairs, lo, hi, args.seed)
    sizes = sorted(p.n for p in products)
    print(f"{len(products)} line-graph products, "
          f"{sizes[0]}..{sizes[-1]} vertices")

    status = 0
    print(f"{'mode':12s} {'pure':>10s} {'compiled':>10s} {'speedup':>9s}")
    for connected in (True, False):
        t_pure, out_pure = run(_cliquepy, products, connected)
        t_comp, out_comp = run(_cliquec, products, connected)
        if out_pure != out_comp:
            print(f"MISMATCH in {'connected' if connected else 'plain'} mode")
            status = 2
        mode = "connected" if connected else "plain"
        print(f"{mode:12s} {t_pure:9.3f}s {t_comp:9.3f}s "
              f"{t_pure / max(t_comp, 1e-9):8.1f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
