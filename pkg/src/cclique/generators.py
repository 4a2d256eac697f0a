"""Instance generators.

Every generator is deterministic in its seed: the same arguments give the
same canonical edge list byte for byte.
"""

from __future__ import annotations

import math
import random

import networkx as nx
import numpy as np
import scipy.sparse as sp

from .graph import build_graph
from .kernels import pivot_enumerate

MAX_PARTS = 6
MAX_N = 10**5


def moon_moser(k):
    """Complete k-partite graph with parts of size 3 (``3^k`` maximal cliques)."""
    if not 1 <= k <= MAX_PARTS:
        raise ValueError(f"moon_moser needs 1 <= k <= {MAX_PARTS}")
    n = 3 * k
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if u // 3 != v // 3]
    return build_graph(edges, n=n)


def gnp(n, p, seed):
    if not 0 <= n <= MAX_N:
        raise ValueError(f"gnp needs 0 <= n <= {MAX_N}")
    if not 0.0 <= p <= 1.0:
        raise ValueError("gnp needs 0 <= p <= 1")
    if p >= 1:
        h = nx.complete_graph(n)
    elif math.log(1.0 - p) == 0.0:
        # the skip sampler divides by log(1 - p); use the dense one
        h = nx.gnp_random_graph(n, p, seed=seed)
    else:
        h = nx.fast_gnp_random_graph(n, p, seed=seed)
    return build_graph(h.edges(), n=n)


def close_bad_pairs(edges, n, c):
    """Add an edge between every bad pair at level ``c`` until none is left."""
    if not edges:
        return set()
    rows, cols = zip(*edges)
    a = sp.coo_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n))
    a = ((a + a.T) > 0).astype(np.int32).tocsr()
    while True:
        counts = (a @ a).tocoo()
        hit = (counts.data >= c) & (counts.row < counts.col)
        r, q = counts.row[hit], counts.col[hit]
        missing = np.asarray(a[r, q]).ravel() == 0
        if not missing.any():
            break
        r, q = r[missing], q[missing]
        extra = sp.coo_matrix(
            (np.ones(2 * len(r), dtype=np.int32), (np.concatenate([r, q]), np.concatenate([q, r]))),
            shape=(n, n),
        )
        a = ((a + extra) > 0).astype(np.int32).tocsr()
    upper = sp.triu(a, k=1).tocoo()
    return set(zip(upper.row.tolist(), upper.col.tolist()))


def planted_cclosed(n, c, seed, degree=4.0, fringe=3, coverage=0.5):
    """Sparse random graph with planted communities, repaired to be c-closed.

    Background: G(n, p) with expected degree ``degree``. On top, disjoint
    communities each made of a clique *core* of ``c - 1`` vertices and an
    independent *fringe* of ``fringe`` vertices joined to the whole core,
    covering about ``coverage`` of the vertices. Vertex ids are shuffled, then
    every remaining bad pair at level ``c`` is joined until none is left, so
    the closure number is at most ``c``.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"planted_cclosed needs 1 <= n <= {MAX_N}")
    if c < 2:
        raise ValueError("planted_cclosed needs c >= 2")
    rng = random.Random(seed)
    p = min(1.0, degree / n)
    edges = set(gnp(n, p, rng.randrange(2**31)).edges())
    perm = list(range(n))
    rng.shuffle(perm)
    size = c - 1 + fringe
    nxt = 0
    for _ in range(int(coverage * n) // size):
        core = perm[nxt: nxt + c - 1]
        rim = perm[nxt + c - 1: nxt + size]
        nxt += size
        for i, x in enumerate(core):
            for y in core[i + 1:]:
                edges.add((min(x, y), max(x, y)))
            for y in rim:
                edges.add((min(x, y), max(x, y)))
    edges = close_bad_pairs(sorted(edges), n, c)
    return build_graph(sorted(edges), n=n)


def random_block_family(rng, k_max=8, block_max=10, pool_max=14):
    """A synthetic filter instance shaped like one elimination step.

    Returns ``(graph, universe, blocks, references)``: blocks are the maximal
    cliques of random vertex subsets of ``universe`` (at most ``block_max``
    vertices each), and references are the maximal cliques of
    ``graph[universe]`` contained in no block, i.e. the cliques the leaf
    extension would supply.
    """
    w = rng.randint(2, pool_max)
    p = rng.random()
    edges = [(i, j) for i in range(w) for j in range(i + 1, w) if rng.random() < p]
    g = build_graph(edges, n=w)
    universe = sorted(rng.sample(range(w), rng.randint(1, w)))
    blocks = []
    vsets = []
    for j in range(rng.randint(1, k_max)):
        b = sorted(rng.sample(universe, rng.randint(1, min(block_max, len(universe)))))
        blocks.append((j, pivot_enumerate(g, b)))
        vsets.append(set(b))
    refs = [k for k in pivot_enumerate(g, universe).cliques if not any(set(k) <= b for b in vsets)]
    return g, universe, blocks, refs


GENERATORS = {"moon_moser": moon_moser, "gnp": gnp, "planted_cclosed": planted_cclosed}


def generate(kind, *args):
    """``generate("gnp", 10, 0.3, 1)`` style dispatch used by the CLI."""
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown generator {kind!r}; choose from {sorted(GENERATORS)}") from None
    return fn(*args)
