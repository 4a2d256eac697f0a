"""Immutable simple undirected graphs over dense vertex ids.

Vertices are ``0 .. n-1``. Each vertex keeps a sorted adjacency tuple (the
primary representation) plus a frozenset for membership tests. Graphs with
``n <= BITSET_LIMIT`` also carry an integer bitmask per vertex, which gives a
second intersection path that the tests check against the sorted one.
"""

from __future__ import annotations

import io
import os
from bisect import bisect_left
from dataclasses import dataclass, field

BITSET_LIMIT = 4096


class GraphParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class ParseMetrics:
    lines: int = 0
    pairs: int = 0
    self_loops: int = 0
    duplicates: int = 0


class Graph:
    """Undirected simple graph with sorted adjacency.

    Build one with :func:`build_graph` or :func:`read_edge_list` rather than
    calling the constructor directly; the constructor trusts its input.
    """

    __slots__ = ("n", "adj", "adj_sets", "adj_bits", "labels", "parse_metrics")

    def __init__(self, n, adj, labels=None, parse_metrics=None):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self.adj_sets = tuple(frozenset(a) for a in self.adj)
        if n <= BITSET_LIMIT:
            bits = []
            for a in self.adj:
                m = 0
                for x in a:
                    m |= 1 << x
                bits.append(m)
            self.adj_bits = tuple(bits)
        else:
            self.adj_bits = None
        self.labels = labels
        self.parse_metrics = parse_metrics

    @property
    def vertices(self):
        return range(self.n)

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj_sets[u]

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield u, v

    @property
    def m(self):
        return sum(len(a) for a in self.adj) // 2

    def induced_bits(self, vertices):
        m = 0
        for x in vertices:
            m |= 1 << x
        return m

    def _check(self, v):
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for graph on {self.n} vertices")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edge_list, n=None, labels=None):
    """Return the simple graph on ``edge_list``.

    Pairs may repeat or appear reversed; self-loops and parallel edges are
    dropped and counted in ``graph.parse_metrics``. ``n`` defaults to one more
    than the largest id seen.
    """
    metrics = ParseMetrics()
    seen = set()
    top = -1
    for pair in edge_list:
        u, v = pair
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in pair {pair!r}")
        metrics.pairs += 1
        top = max(top, u, v)
        if u == v:
            metrics.self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            metrics.duplicates += 1
            continue
        seen.add(key)
    if n is None:
        n = top + 1
    elif top >= n:
        raise ValueError(f"vertex id {top} does not fit in n={n}")
    adj = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return Graph(n, adj, labels=labels, parse_metrics=metrics)


def common_neighbors(g, u, v):
    """Sorted ``N(u) & N(v)`` for distinct ``u`` and ``v``."""
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return sorted_intersection(g.adj[u], g.adj[v])


def common_neighbors_bits(g, u, v):
    """Bitset route for :func:`common_neighbors`; only for ``n <= BITSET_LIMIT``."""
    if g.adj_bits is None:
        raise ValueError("bitset mirror disabled for this graph size")
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return bits_to_tuple(g.adj_bits[u] & g.adj_bits[v])


def bits_to_tuple(m):
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return tuple(out)


@dataclass(frozen=True)
class SuffixView:
    """The induced subgraph on ``order[start:]``, i.e. the vertices at or after
    position ``start`` of an elimination order."""

    base: Graph
    order: tuple
    start: int
    pos: tuple = field(repr=False, compare=False, default=None)

    @classmethod
    def of(cls, g, order, start=0):
        order = tuple(order)
        pos = [0] * g.n
        for i, v in enumerate(order):
            pos[v] = i
        return cls(g, order, start, tuple(pos))

    def at(self, start):
        return SuffixView(self.base, self.order, start, self.pos)

    def __contains__(self, v):
        return 0 <= v < self.base.n and self.pos[v] >= self.start

    @property
    def vertices(self):
        return self.order[self.start:]


def neighborhood_in_suffix(view, v):
    """Sorted ``N(v)`` restricted to the view's vertices."""
    if v not in view:
        raise ValueError(f"vertex {v} is not in the suffix view starting at {view.start}")
    pos, start = view.pos, view.start
    return tuple(x for x in view.base.adj[v] if pos[x] >= start)


def check_permutation(order, n):
    order = tuple(order)
    if len(order) != n or sorted(order) != list(range(n)):
        raise ValueError(f"order is not a permutation of 0..{n - 1}")
    return order


# edge-list text format -------------------------------------------------------


def parse_edge_list(text, relabel=False):
    """Parse ``u v`` lines; ``#`` lines and blank lines are skipped.

    With ``relabel=True`` arbitrary tokens are mapped to dense ids in order of
    first appearance and the original tokens are kept on ``graph.labels``.
    """
    pairs = []
    mapping = {}
    labels = []
    lines = 0
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        lines += 1
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected two vertex ids, got {line!r}")
        if relabel:
            ids = []
            for tok in parts:
                if tok not in mapping:
                    mapping[tok] = len(labels)
                    labels.append(tok)
                ids.append(mapping[tok])
            pairs.append(tuple(ids))
            continue
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphParseError(lineno, f"negative vertex id in {line!r}")
        pairs.append((u, v))
    g = build_graph(pairs, n=len(labels) if relabel else None, labels=labels if relabel else None)
    g.parse_metrics.lines = lines
    return g


def read_edge_list(path, relabel=False):
    with open(os.fspath(path)) as fh:
        return parse_edge_list(fh.read(), relabel=relabel)


def format_edge_list(g, header=True):
    """Canonical text: edges sorted lexicographically with ``u < v``.

    The header comment records ``n`` so isolated trailing vertices survive a
    round trip.
    """
    out = []
    if header:
        out.append(f"# n={g.n} m={g.m}\n")
    out.extend(f"{u} {v}\n" for u, v in g.edges())
    return "".join(out)


def parse_canonical(text):
    """Inverse of :func:`format_edge_list` (honours the ``# n=`` header)."""
    n = None
    first = text.split("\n", 1)[0]
    if first.startswith("# n="):
        n = int(first[4:].split()[0])
    g = parse_edge_list(text)
    if n is not None and n != g.n:
        g = build_graph(g.edges(), n=n)
    return g


def write_edge_list(g, path):
    with open(os.fspath(path), "w") as fh:
        fh.write(format_edge_list(g))


def sorted_intersection(a, b):
    """Merge-intersection of two sorted tuples."""
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return ()
    if len(b) > 8 * len(a):
        out = []
        lo = 0
        for x in a:
            lo = bisect_left(b, x, lo)
            if lo < len(b) and b[lo] == x:
                out.append(x)
        return tuple(out)
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return tuple(out)
