"""Maximal clique enumerators for small induced subgraphs.

Three interchangeable kernels, each taking a graph and a vertex subset:

* :func:`pivot_enumerate`: Bron-Kerbosch with Tomita pivoting.
* :func:`output_sensitive_enumerate`: Tsukiyama-style reverse search with
  polynomial delay.
* :func:`oracle_enumerate`: exhaustive subset scan, the ground truth.

All cliques come back as sorted vertex tuples of the original graph.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from . import _accel

DEFAULT_ORACLE_LIMIT = 25


class OracleLimitError(RuntimeError):
    """Refusal to run the exponential oracle above its size guard."""


@dataclass
class KernelStats:
    recursive_calls: int = 0
    emitted: int = 0
    delay_max: int = 0
    ops: int = 0


@dataclass
class CliqueList:
    cliques: list
    source_tag: str
    stats: KernelStats = field(default_factory=KernelStats)

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def as_set(self):
        return {frozenset(k) for k in self.cliques}


def local_masks(g, vs):
    """Bitmask adjacency of ``g[vs]`` with local ids following ``vs``."""
    pos = {v: i for i, v in enumerate(vs)}
    masks = [0] * len(vs)
    sets = g.adj_sets
    k = len(vs)
    for i, v in enumerate(vs):
        a = g.adj[v]
        m = 0
        if len(a) < k:
            for x in a:
                j = pos.get(x)
                if j is not None:
                    m |= 1 << j
        else:
            sv = sets[v]
            for j, x in enumerate(vs):
                if x in sv:
                    m |= 1 << j
        masks[i] = m
    return masks


def _decode(mask, vs):
    out = []
    while mask:
        low = mask & -mask
        out.append(vs[low.bit_length() - 1])
        mask ^= low
    return tuple(out)


def _prepare(g, subset):
    vs = sorted(set(subset))
    for v in vs:
        g._check(v)
    return vs


def pivot_enumerate(g, subset=None):
    vs = _prepare(g, range(g.n) if subset is None else subset)
    if not vs:
        return CliqueList([], "tomita", KernelStats(ops=1))
    masks = local_masks(g, vs)
    found, calls, ops, delay = _accel.bk_pivot(masks)
    cliques = [_decode(m, vs) for m in found]
    stats = KernelStats(calls, len(cliques), delay, ops + len(vs))
    return CliqueList(cliques, "tomita", stats)


def output_sensitive_enumerate(g, subset=None):
    """Reverse search over the prefix graphs ``G_1 ⊂ G_2 ⊂ ... ⊂ G_m``.

    A maximal clique ``K`` of ``G_{i-1}`` has at most two children in ``G_i``:
    ``K + v_i`` when ``K ⊆ N(v_i)``; otherwise ``K`` itself, plus
    ``(K & N(v_i)) + v_i`` when that set is maximal in ``G_i`` and ``K`` is the
    greedy completion of ``K & N(v_i)`` in ``G_{i-1}``. Every maximal clique
    of ``G_i`` has exactly one parent, so a depth-first walk emits each leaf
    once with ``O(m^2)`` word operations between consecutive outputs.
    """
    vs = _prepare(g, range(g.n) if subset is None else subset)
    m = len(vs)
    if m == 0:
        return CliqueList([], "outsens", KernelStats(ops=1))
    masks = local_masks(g, vs)
    ops = m
    calls = 0
    last = 0
    delay_max = 0
    out = []

    def common(k, limit):
        nonlocal ops
        acc = limit
        while k:
            low = k & -k
            acc &= masks[low.bit_length() - 1]
            k ^= low
            ops += 1
        return acc

    def completion(s, limit):
        # greedy: keep adding the smallest vertex adjacent to everything so far
        nonlocal ops
        cand = common(s, limit) & ~s
        while cand:
            low = cand & -cand
            s |= low
            cand &= masks[low.bit_length() - 1]
            ops += 1
        return s

    stack = [(1, 1)]  # (clique mask, level i): K is maximal in G_i
    while stack:
        k, i = stack.pop()
        calls += 1
        ops += 1
        if i == m:
            out.append(_decode(k, vs))
            if ops - last > delay_max:
                delay_max = ops - last
            last = ops
            continue
        bit = 1 << i
        nv = masks[i]
        prefix = bit - 1
        if k & ~nv == 0:
            stack.append((k | bit, i + 1))
            continue
        s = k & nv
        kid = s | bit
        children = [(k, i + 1)]
        if common(kid, prefix) == 0 and completion(s, prefix) == k:
            children.append((kid, i + 1))
        stack.extend(reversed(children))
    return CliqueList(out, "outsens", KernelStats(calls, len(out), delay_max, ops))


def oracle_limit():
    raw = os.environ.get("CCLIQUE_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_ORACLE_LIMIT


def oracle_enumerate(g, subset=None):
    """Scan every vertex subset, keep the cliques, keep the maximal ones."""
    vs = _prepare(g, range(g.n) if subset is None else subset)
    m = len(vs)
    limit = oracle_limit()
    if m > limit:
        raise OracleLimitError(
            f"oracle refuses {m} vertices (limit {limit}; set CCLIQUE_ORACLE_LIMIT to raise it)"
        )
    if m == 0:
        return CliqueList([], "oracle", KernelStats(ops=1))
    masks = local_masks(g, vs)
    size = 1 << m
    is_clique = np.zeros(size, dtype=bool)
    is_clique[0] = True
    for b in range(m):
        low = np.arange(1 << b, dtype=np.int64)
        inside = (low & ~masks[b] & ((1 << b) - 1)) == 0
        is_clique[1 << b: 1 << (b + 1)] = is_clique[: 1 << b] & inside
    extendable = np.zeros(size, dtype=bool)
    for b in range(m):
        ic = is_clique.reshape(-1, 2, 1 << b)
        ex = extendable.reshape(-1, 2, 1 << b)
        ex[:, 0, :] |= ic[:, 1, :]
    maximal = np.flatnonzero(is_clique & ~extendable)
    cliques = sorted(_decode(int(s), vs) for s in maximal if s)
    return CliqueList(cliques, "oracle", KernelStats(1, len(cliques), size, size))


def is_maximal_in(g, subset, k):
    """Whether ``k`` is a maximal clique of ``g[subset]``; the empty set never is."""
    k = tuple(k)
    if not k:
        return False
    ks = set(k)
    sets = g.adj_sets
    for i, a in enumerate(k):
        sa = sets[a]
        for b in k[i + 1:]:
            if b not in sa:
                return False
    sub = subset if isinstance(subset, (set, frozenset)) else set(subset)
    anchor = min(k, key=lambda x: len(g.adj[x]))
    for x in g.adj[anchor]:
        if x in sub and x not in ks and all(x in sets[y] for y in k):
            return False
    return True


KERNELS = {
    "tomita": pivot_enumerate,
    "outsens": output_sensitive_enumerate,
    "oracle": oracle_enumerate,
}
