"""Pure-Python clique enumeration kernel over bitmask adjacency rows.

Fallback twin of the compiled kernel in _cliquec; both expose the same
enumerate_cliques() contract and must produce identical output.  Vertex
sets are Python ints used as bitmasks, so graphs of any size work.

Two modes:

* plain: all inclusion-maximal cliques (Bron-Kerbosch with pivoting).
* connected: all maximal type-1 connected cliques, i.e. cliques whose
  members are mutually reachable through type-1 edges inside the clique
  and that cannot be extended by any vertex keeping that property.
  Candidates split into an active pool P (a type-1 edge into the current
  clique exists) and a dormant pool D (adjacent to everything but only
  via type-0 edges); dormant vertices wake up when a later member brings
  a type-1 edge.  X and Y are the corresponding already-processed pools;
  a clique is reported when both P and X are empty.
"""

from __future__ import annotations

import time

BACKEND_NAME = "python"

_TICK_EVERY = 1024


class _Deadline:
    __slots__ = ("at", "ticks")

    def __init__(self, at):
        self.at = at
        self.ticks = 0

    def check(self):
        if self.at is None:
            return
        self.ticks += 1
        if self.ticks >= _TICK_EVERY:
            self.ticks = 0
            if time.monotonic() > self.at:
                raise TimeoutError("clique enumeration deadline exceeded")


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _enum_plain(n, adj, lower_bound, deadline, out):
    def expand(members, cand, excl):
        deadline.check()
        if cand == 0 and excl == 0:
            if len(members) >= lower_bound:
                out.append(tuple(members))
            return
        if len(members) + cand.bit_count() < lower_bound:
            return
        # pivot with the most candidate neighbors excludes the most branches
        pivot, cover = -1, -1
        for u in _bits(cand | excl):
            c = (cand & adj[u]).bit_count()
            if c > cover:
                pivot, cover = u, c
        for v in _bits(cand & ~adj[pivot]):
            bit = 1 << v
            members.append(v)
            expand(members, cand & adj[v], excl & adj[v])
            members.pop()
            cand &= ~bit
            excl |= bit

    expand([], (1 << n) - 1 if n else 0, 0)


def _enum_connected(n, adj, t1, lower_bound, deadline, out):
    def expand(members, p, d, x, y):
        deadline.check()
        if p == 0 and x == 0:
            if len(members) >= lower_bound:
                out.append(tuple(members))
            return
        if len(members) + (p | d).bit_count() < lower_bound:
            return
        # Pivoting is only sound here when every dormant candidate is a
        # neighbor of the pivot; otherwise a maximal clique could hide
        # entirely behind the pivot's neighborhood via dormant vertices.
        branch = p
        pivot, cover = -1, -1
        for u in _bits(p | x):
            if d & ~adj[u]:
                continue
            c = (p & adj[u]).bit_count()
            if c > cover:
                pivot, cover = u, c
        if pivot >= 0:
            branch = p & ~adj[pivot]
        for v in _bits(branch):
            bit = 1 << v
            av = adj[v]
            tv = t1[v]
            members.append(v)
            expand(members,
                   (p & av) | (d & av & tv),
                   d & av & ~tv,
                   (x & av) | (y & av & tv),
                   y & av & ~tv)
            members.pop()
            p &= ~bit
            x |= bit

    done = 0
    for u in range(n):
        bit = 1 << u
        c_nbr = t1[u]
        d_nbr = adj[u] & ~t1[u]
        expand([u], c_nbr & ~done, d_nbr & ~done, c_nbr & done, d_nbr & done)
        done |= bit


def _prune_unreachable(n, adj, t1, bound):
    """Clear adjacency bits between pairs with no type-1 walk of at most
    `bound` edges.

    Sound in connected mode when `bound` is the clique length cap
    min(|V(left)|, |V(right)|) - 1: a type-1 path inside a clique has
    pairwise-distinct coordinates on both sides, so it never needs more
    edges than that.  Type-1 edges are 1-step reachable and always stay.
    """
    if all(adj[v] == t1[v] for v in range(n)):
        return adj  # nothing type-0 to remove
    # one eccentricity probe from vertex 0: the full per-vertex pass only
    # pays off when it certainly removes something, which the probe
    # guarantees by finding a vertex beyond the bound (or a type-1 gap)
    seen = 1 << 0
    frontier = seen
    steps = 0
    while frontier and steps <= bound:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= t1[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        if frontier:
            seen |= frontier
            steps += 1
    if seen == (1 << n) - 1 and steps <= bound:
        return adj
    reach = [1 << v for v in range(n)]
    for v in range(n):
        frontier = t1[v]
        seen = reach[v] | frontier
        for _ in range(bound - 1):
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= t1[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
        reach[v] = seen
    return [adj[v] & reach[v] for v in range(n)]


def enumerate_cliques(n, adj, t1, connected, lower_bound=0, deadline=None,
                      prune_bound=0):
    """Enumerate maximal cliques of a typed product graph.

    adj[i] and t1[i] are bitmask rows (t1 a subset of adj).  Returns
    sorted tuples of members, only those with at least lower_bound
    vertices; branches that provably stay below the bound are cut.
    deadline is an absolute time.monotonic() value; TimeoutError is
    raised when exceeded.  With prune_bound > 0 (connected mode only),
    type-0 edges whose endpoints no type-1 walk of at most prune_bound
    edges can join are dropped before the search.
    """
    out = []
    dl = _Deadline(deadline)
    if n:
        if connected:
            if prune_bound > 0:
                adj = _prune_unreachable(n, adj, t1, prune_bound)
            _enum_connected(n, adj, t1, lower_bound, dl, out)
        else:
            _enum_plain(n, adj, lower_bound, dl, out)
    return sorted(tuple(sorted(c)) for c in out)
