"""Vertex-elimination driver for maximal clique enumeration.

Vertices are processed from the back of the elimination order to the front,
so step ``i`` works on the suffix graph ``G[V_i]`` and the forest holds the
maximal cliques of ``G[V_{i+1}]`` when the step starts. Each new maximal
clique through ``v_i`` is either an old leaf extended by ``v_i`` or ``v_i``
on top of a clique that is maximal in ``G[N(v_i) ∩ V_{i+1}]`` and lies in some
block ``N(v_i) ∩ N(u)`` of a non-neighbour ``u``. The block cliques go through
one of the filters in :mod:`cclique.trie`.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from . import closure
from .graph import SuffixView, check_permutation, neighborhood_in_suffix
from .kernels import KERNELS
from .trie import FilterStats, curing_blocks, double_scan, exact_filter
from .wedges import candidate_neighborhood, enumerate_wedges, nonneighbor_suffix_set

FILTERS = ("doublescan", "exact", "cure")
MODES = ("improved", "baseline")


class ForestNode:
    __slots__ = ("vertex", "children", "parent")

    def __init__(self, vertex, parent=None):
        self.vertex = vertex
        self.children = {}
        self.parent = parent


class SolutionForest:
    """Forest whose root-to-leaf paths are cliques.

    Each leaf caches its path as a frozenset so the extension test is a
    single subset check.
    """

    def __init__(self):
        self.roots = []
        self.leaves = {}

    def add_tree(self, v, cliques=()):
        """New root ``v`` with one branch per clique; shared prefixes merge."""
        root = ForestNode(v)
        self.roots.append(root)
        if not cliques:
            self.leaves[root] = frozenset((v,))
            return root
        for k in cliques:
            node = root
            for x in k:
                child = node.children.get(x)
                if child is None:
                    child = node.children[x] = ForestNode(x, node)
                node = child
            self.leaves[node] = frozenset(k) | {v}
        return root

    def extend(self, v, nbhd):
        """Hang ``v`` under every leaf whose clique lies inside ``nbhd``.

        Returns the extended cliques (without ``v``).
        """
        grown = []
        leaves = self.leaves
        for leaf, k in list(leaves.items()):
            if k <= nbhd:
                child = ForestNode(v, leaf)
                leaf.children[v] = child
                del leaves[leaf]
                leaves[child] = k | {v}
                grown.append(k)
        return grown

    @staticmethod
    def path(leaf):
        out = []
        node = leaf
        while node is not None:
            out.append(node.vertex)
            node = node.parent
        return out[::-1]

    def cliques(self):
        return sorted(tuple(sorted(k)) for k in self.leaves.values())

    def __len__(self):
        return len(self.leaves)


def extend_leaves(f, v, nbhd):
    return len(f.extend(v, frozenset(nbhd)))


@dataclass
class BoundCheck:
    name: str
    lhs: float
    rhs: float
    holds: bool


@dataclass
class RunMetrics:
    n: int = 0
    mode: str = "improved"
    filter_mode: str = "doublescan"
    kernel: str = "tomita"
    c: int | None = None
    alpha: int = 0
    base_cases: int = 0
    alpha_i: list = field(default_factory=list)
    beta_i: list = field(default_factory=list)
    ref_i: list = field(default_factory=list)
    max_block_size: int = 0
    max_block_cliques: int = 0
    kernel_calls: int = 0
    kernel_ops: int = 0
    filter_ops: int = 0
    trie_ops: int = 0
    curing_probes: int = 0
    exact_ops: int = 0
    duplicates: int = 0
    completion_rejects: int = 0
    leaf_checks: int = 0
    wedge_count: int = 0
    wedge_time: int = 0
    enum_time: int = 0
    bound_checks: list = field(default_factory=list)

    @property
    def work(self):
        return self.kernel_ops + self.filter_ops

    def to_json(self):
        d = asdict(self)
        d["bound_checks"] = [asdict(b) if isinstance(b, BoundCheck) else b for b in self.bound_checks]
        return d

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, d):
        d = dict(d)
        d["bound_checks"] = [BoundCheck(**b) for b in d.get("bound_checks", [])]
        return cls(**d)


def resolve_order(g, order):
    """``None`` -> identity; ``"auto"`` -> greedy weak-closure order (with its c)."""
    if order is None:
        return tuple(range(g.n)), None
    if isinstance(order, str):
        if order != "auto":
            raise ValueError(f"unknown order {order!r}")
        c, o = closure.weak_closure_number(g)
        return tuple(o), c
    return check_permutation(order, g.n), None


def enumerate_cclosed(
    g,
    order=None,
    mode="improved",
    filter=None,
    kernel="tomita",
    c=None,
    direct=False,
    index=None,
):
    """Enumerate the maximal cliques of ``g``; returns ``(forest, metrics)``.

    ``order="auto"`` uses the greedy weak-closure order and arms the bound
    checks with its ``c``. An explicit ``c`` is verified against the order
    before the checks are armed. ``direct=True`` builds blocks by adjacency
    intersection instead of through the wedge index.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if filter is None:
        filter = "cure" if mode == "baseline" else "doublescan"
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}")
    if mode == "baseline" and (filter != "cure" or kernel != "tomita"):
        raise ValueError("baseline mode runs the pivot kernel with the curing filter")
    if kernel not in KERNELS:
        raise ValueError(f"kernel must be one of {tuple(KERNELS)}")
    run_kernel = KERNELS[kernel]

    order, auto_c = resolve_order(g, order)
    if c is None:
        c = auto_c
    elif not closure.is_weak_order(g, c, order):
        raise ValueError(f"order is not a weak-closure order at c={c}")

    n = g.n
    metrics = RunMetrics(n=n, mode=mode, filter_mode=filter, kernel=kernel, c=c)
    metrics.alpha_i = [0] * n
    metrics.beta_i = [0] * n
    metrics.ref_i = [0] * n
    forest = SolutionForest()
    if n == 0:
        return forest, metrics

    idx = None
    if not direct:
        idx = index if index is not None else enumerate_wedges(g)
        metrics.wedge_count = idx.count
        metrics.wedge_time = idx.elapsed_us

    t0 = time.perf_counter_ns()
    fstats = FilterStats()
    base = SuffixView.of(g, order)
    sets = g.adj_sets
    for i in range(n - 1, -1, -1):
        v = order[i]
        if i == n - 1:
            forest.add_tree(v)
            metrics.base_cases += 1
            continue
        view = base.at(i)
        metrics.leaf_checks += len(forest.leaves)
        grown = forest.extend(v, sets[v])
        nb = neighborhood_in_suffix(view, v)
        if not nb:
            forest.add_tree(v)
            metrics.base_cases += 1
            continue

        blocks = []
        beta = 0
        for u in nonneighbor_suffix_set(view, v):
            block = candidate_neighborhood(idx, view, v, u, direct=direct)
            metrics.kernel_calls += 1
            if not block:
                metrics.kernel_ops += 1
                continue
            cl = run_kernel(g, block)
            metrics.kernel_ops += cl.stats.ops
            beta += len(cl)
            if len(block) > metrics.max_block_size:
                metrics.max_block_size = len(block)
            if len(cl) > metrics.max_block_cliques:
                metrics.max_block_cliques = len(cl)
            blocks.append((u, cl))
        metrics.beta_i[i] = beta
        if not blocks:
            continue

        covered = set()
        for _, cl in blocks:
            for k in cl.cliques:
                covered.update(k)
        refs = [k for k in grown if not covered.isdisjoint(k)]
        metrics.ref_i[i] = len(refs)

        if filter == "doublescan":
            kept = double_scan(blocks, references=refs, stats=fstats)
        elif filter == "exact":
            kept = exact_filter(blocks, g, frozenset(nb), stats=fstats)
        else:
            kept = curing_blocks(blocks, refs, stats=fstats)
        if kept.cliques:
            forest.add_tree(v, kept.cliques)
        metrics.alpha_i[i] = len(kept)

    metrics.enum_time = (time.perf_counter_ns() - t0) // 1000
    metrics.alpha = len(forest)
    metrics.trie_ops = fstats.trie_ops
    metrics.curing_probes = fstats.curing_probes
    metrics.exact_ops = fstats.exact_ops
    metrics.filter_ops = fstats.ops
    metrics.duplicates = fstats.duplicates
    metrics.completion_rejects = fstats.completion_rejects
    if c is not None:
        metrics.bound_checks = check_bounds(metrics, n, c)
    return forest, metrics


def check_bounds(m, n, c):
    """Evaluate the c-dependent counting bounds on a finished run."""
    checks = []
    rhs = 3 ** ((c - 1) / 3) * n * n
    checks.append(BoundCheck("alpha <= 3^((c-1)/3) n^2", m.alpha, rhs, m.alpha <= rhs))
    checks.append(BoundCheck("block size < c", m.max_block_size, c, m.max_block_size < c))
    rhs = 3 ** (c / 3)
    checks.append(
        BoundCheck("block cliques <= 3^(c/3)", m.max_block_cliques, rhs, m.max_block_cliques <= rhs)
    )
    # report the step closest to (or furthest past) its cap
    worst = (0, 0)
    for b, a, r in zip(m.beta_i, m.alpha_i, m.ref_i):
        cap = n * c * (a + r)
        if b - cap > worst[0] - worst[1]:
            worst = (b, cap)
    checks.append(
        BoundCheck("beta_i <= n c (alpha_i + ref_i)", worst[0], worst[1], worst[0] <= worst[1])
    )
    return checks


def bounds_hold(checks):
    return all(b.holds for b in checks)
