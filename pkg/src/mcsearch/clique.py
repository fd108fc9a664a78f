"""Maximal clique enumeration on modular products.

The hot kernel has two interchangeable implementations: a compiled
extension (_cliquec, Cython) and a pure-Python fallback (_cliquepy).
The compiled one is preferred at import time; set MCS_PURE_PYTHON=1 to
force the fallback.  benchmarks/compare_backends.py measures the gap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import reduce

if os.environ.get("MCS_PURE_PYTHON", "0") not in ("", "0"):
    from . import _cliquepy as _backend
else:
    try:
        from . import _cliquec as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _cliquepy as _backend


def backend_name() -> str:
    """Which kernel is active: "compiled" or "python"."""
    return _backend.BACKEND_NAME


@dataclass(frozen=True)
class Clique:
    """A clique of a ProductGraph, as a sorted tuple of vertex ids."""

    members: tuple
    type1_connected: bool


def _t1_connected(members, t1):
    if len(members) <= 1:
        return True
    member_mask = 0
    for v in members:
        member_mask |= 1 << v
    seen = 1 << members[0]
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nxt |= t1[v] & member_mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == member_mask


def enumerate_maximal_cliques(p, lower_bound: int = 0, deadline=None):
    """All inclusion-maximal cliques of the product, both edge types
    counting as adjacency.

    Cliques smaller than lower_bound are suppressed and branches provably
    below the bound are cut; every maximal clique of size >= lower_bound
    is still emitted.  deadline is an absolute time.monotonic() value.
    """
    if lower_bound < 0:
        raise ValueError("lower_bound must be >= 0")
    adj, t1 = p.masks()
    raw = _backend.enumerate_cliques(p.n, adj, t1, False, lower_bound, deadline)
    return [Clique(members, _t1_connected(members, t1)) for members in raw]


def enumerate_maximal_connected_cliques(p, lower_bound: int = 0, deadline=None,
                                        require_global_maximality: bool = False,
                                        prune_bound: int = 0):
    """All maximal type-1 connected cliques of the product.

    Maximality is with respect to extensions that keep the clique type-1
    connected: a clique extendable only through type-0 edges is still
    maximal here, because such an extension would disconnect it.  Pass
    require_global_maximality=True for the stricter reading that also
    rejects cliques extendable by a vertex adjacent purely via type-0
    edges (the survivors are exactly the inclusion-maximal cliques of the
    whole product that happen to be type-1 connected).

    prune_bound > 0 drops type-0 edges between vertices that no type-1
    walk of at most prune_bound edges connects before searching; with
    prune_bound = min(|V(left)|, |V(right)|) - 1 of the product factors
    this cannot change the result (see prune_type0_edges).
    """
    if lower_bound < 0:
        raise ValueError("lower_bound must be >= 0")
    adj, t1 = p.masks()
    raw = _backend.enumerate_cliques(p.n, adj, t1, True, lower_bound, deadline,
                                     prune_bound)
    if require_global_maximality:
        raw = [members for members in raw
               if not _extendable_by_any_neighbor(members, adj)]
    return [Clique(members, True) for members in raw]


def _extendable_by_any_neighbor(members, adj):
    common = reduce(lambda acc, v: acc & adj[v], members, -1)
    for v in members:
        common &= ~(1 << v)
    return common != 0
