"""Closure and weak-closure numbers.

A graph is c-closed when every non-adjacent pair has fewer than ``c`` common
neighbours. A non-adjacent pair with at least ``c`` common neighbours is a
*bad pair*; the graph is weakly c-closed when its vertices can be peeled off
one at a time, each vertex taking part in no bad pair of what remains.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

INCREMENTAL_LIMIT = 2048


@dataclass(frozen=True)
class BadPair:
    u: int
    v: int
    witnesses: int


@dataclass
class ClosureReport:
    closure_c: int
    weak_c: int
    weak_order: list
    bad_pair_count_at: dict = field(default_factory=dict)
    failed_at: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "closure_c": self.closure_c,
            "weak_c": self.weak_c,
            "weak_order": list(self.weak_order),
            "bad_pair_count_at": {str(k): v for k, v in sorted(self.bad_pair_count_at.items())},
        }


def nonadjacent_pair_counts(g):
    """Common-neighbour count for every non-adjacent pair that has at least one.

    Counts come from the wedges through each midpoint, so the cost is
    ``sum(deg^2)`` rather than ``n^2``.
    """
    counts = Counter()
    sets = g.adj_sets
    for m in range(g.n):
        nb = g.adj[m]
        for i, a in enumerate(nb):
            sa = sets[a]
            for b in nb[i + 1:]:
                if b not in sa:
                    counts[a, b] += 1
    return counts


def closure_number(g):
    counts = nonadjacent_pair_counts(g)
    return 1 + max(counts.values(), default=0)


def bad_pairs(g, c):
    if c < 1:
        raise ValueError("c must be a positive integer")
    counts = nonadjacent_pair_counts(g)
    return [BadPair(u, v, k) for (u, v), k in sorted(counts.items()) if k >= c]


def _in_bad_pair(g, v, alive, c):
    """Whether ``v`` is in a bad pair of the subgraph induced by ``alive``."""
    cnt = Counter()
    sv = g.adj_sets[v]
    for x in g.adj[v]:
        if alive[x]:
            for w in g.adj[x]:
                if alive[w] and w != v and w not in sv:
                    cnt[w] += 1
    return any(k >= c for k in cnt.values())


def _order_recompute(g, c):
    alive = [True] * g.n
    order = []
    for _ in range(g.n):
        for v in range(g.n):
            if alive[v] and not _in_bad_pair(g, v, alive, c):
                break
        else:
            return order, False
        alive[v] = False
        order.append(v)
    return order, True


def _order_incremental(g, c):
    n = g.n
    a = np.zeros((n, n), dtype=np.float64)
    for u in range(n):
        a[u, list(g.adj[u])] = 1.0
    # float matmul goes through BLAS; counts stay exact far below 2**53
    cnt = np.rint(a @ a).astype(np.int32)
    np.fill_diagonal(cnt, 0)
    bad = (cnt >= c) & (a == 0)
    np.fill_diagonal(bad, False)
    bad_deg = bad.sum(axis=1)
    alive = np.ones(n, dtype=bool)
    order = []
    for _ in range(n):
        free = np.flatnonzero(alive & (bad_deg == 0))
        if free.size == 0:
            return order, False
        w = int(free[0])
        order.append(w)
        alive[w] = False
        # w is free, so it sits in no bad pair; only counts among its live
        # neighbours change when it leaves.
        nb = np.flatnonzero((a[w] == 1) & alive)
        if nb.size > 1:
            sub = np.ix_(nb, nb)
            cnt[sub] -= 1
            old = bad[sub]
            new = old & (cnt[sub] >= c)
            bad[sub] = new
            bad_deg[nb] -= (old & ~new).sum(axis=1)
    return order, True


def weak_closure_order(g, c, method="auto"):
    """Greedy weak-closure ordering at level ``c``, or ``None`` if stuck.

    Repeatedly removes the smallest-id vertex that is in no bad pair of the
    remaining induced subgraph. ``method`` picks the count-matrix route
    (``"incremental"``) or the per-step intersection route (``"recompute"``);
    ``"auto"`` uses the matrix when ``n <= INCREMENTAL_LIMIT``.
    """
    order, ok = _greedy(g, c, method)
    return order if ok else None


def _greedy(g, c, method):
    if c < 1:
        raise ValueError("c must be a positive integer")
    if method == "auto":
        method = "incremental" if 0 < g.n <= INCREMENTAL_LIMIT else "recompute"
    if method == "incremental":
        return _order_incremental(g, c)
    if method == "recompute":
        return _order_recompute(g, c)
    raise ValueError(f"unknown method {method!r}")


def is_weak_order(g, c, order):
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertex set")
    alive = [True] * g.n
    for v in order:
        if _in_bad_pair(g, v, alive, c):
            return False
        alive[v] = False
    return True


def weak_closure_number(g, method="auto", failures=None):
    """Smallest ``c`` with a weak-closure ordering, and that ordering.

    Scans ``c = 1, 2, ...``; success is guaranteed by the closure number.
    Failed levels are recorded in ``failures`` (c -> number of vertices
    peeled before getting stuck) when a dict is passed.
    """
    top = closure_number(g)
    for c in range(1, top + 1):
        order, ok = _greedy(g, c, method)
        if ok:
            return c, order
        if failures is not None:
            failures[c] = len(order)
    raise AssertionError("weak closure search passed the closure number")


def analyze(g, method="auto"):
    counts = nonadjacent_pair_counts(g)
    closure_c = 1 + max(counts.values(), default=0)
    failures = {}
    weak_c, order = weak_closure_number(g, method=method, failures=failures)
    per_c = {c: sum(1 for k in counts.values() if k >= c) for c in range(1, closure_c + 1)}
    return ClosureReport(closure_c, weak_c, order, per_c, failures)
