"""Wedge (induced 2-path) index.

A wedge ``(a, m, b)`` has edges ``a-m`` and ``m-b`` but no edge ``a-b``. The
index maps every vertex to the wedges in which it is an endpoint, grouped by
the other endpoint. For a pivot ``v`` and a non-neighbour ``u`` the midpoints
of the ``v``/``u`` wedges are exactly ``N(v) & N(u)``: the block on which the
enumeration driver runs its small clique searches.
"""

from __future__ import annotations

import time
from typing import NamedTuple

from . import _accel
from .graph import sorted_intersection


class Wedge(NamedTuple):
    end_a: int
    mid: int
    end_b: int


class WedgeIndex:
    """Per-endpoint wedge lists built once on the whole graph.

    ``mids[x][y]`` is the sorted tuple of midpoints of wedges with endpoints
    ``x`` and ``y``; ``by_endpoint(x)`` expands that into :class:`Wedge`
    records ordered by (other endpoint, midpoint).
    """

    def __init__(self, graph, mids, count, elapsed_us):
        self.graph = graph
        self.mids = mids
        self.count = count
        self.elapsed_us = elapsed_us

    def by_endpoint(self, x):
        out = []
        for y in sorted(self.mids[x]):
            for m in self.mids[x][y]:
                a, b = (x, y) if x < y else (y, x)
                out.append(Wedge(a, m, b))
        return out

    def endpoint_counts(self):
        return [sum(len(ms) for ms in d.values()) for d in self.mids]

    def wedges(self):
        """All wedges once each, in canonical ``(a, m, b)`` order."""
        for a, d in enumerate(self.mids):
            for b in sorted(d):
                if b > a:
                    for m in d[b]:
                        yield Wedge(a, m, b)

    def partners(self, v):
        return self.mids[v].keys()


def enumerate_wedges(g):
    """Build the :class:`WedgeIndex` of ``g`` and time it (microseconds)."""
    t0 = time.perf_counter_ns()
    mids, count = _accel.wedge_mids(g.adj, g.adj_sets)
    elapsed = (time.perf_counter_ns() - t0) // 1000
    return WedgeIndex(g, mids, count, elapsed)


def candidate_neighborhood(idx, view, v, u, direct=False):
    """Midpoints of the ``v``/``u`` wedges that lie in ``view``.

    Equals ``N(v) & N(u) & V_i`` for the non-adjacent pair. ``direct=True``
    skips the index and intersects adjacency lists instead.
    """
    g = idx.graph if idx is not None else view.base
    if g.has_edge(v, u):
        raise ValueError(f"{u} is adjacent to {v}; candidate blocks need a non-neighbour")
    if v == u:
        raise ValueError("pivot and partner must differ")
    if v not in view or u not in view:
        raise ValueError("pivot and partner must both be in the view")
    pos, start = view.pos, view.start
    if direct:
        ms = sorted_intersection(g.adj[v], g.adj[u])
    else:
        ms = idx.mids[v].get(u, ())
    return tuple(x for x in ms if pos[x] >= start)


def nonneighbor_suffix_set(view, v):
    """Vertices of the view other than ``v`` that are not adjacent to it."""
    if v not in view:
        raise ValueError(f"vertex {v} is not in the view")
    nb = view.base.adj_sets[v]
    return tuple(sorted(x for x in view.vertices if x != v and x not in nb))


def wedge_count_formula(g):
    """Independent count: sum over midpoints of C(deg, 2) minus edges among N(m)."""
    total = 0
    for m in range(g.n):
        nb = g.adj[m]
        d = len(nb)
        inside = 0
        for x in nb:
            inside += len(sorted_intersection(g.adj[x], nb))
        total += d * (d - 1) // 2 - inside // 2
    return total
