"""Prefix-tree filtering of candidate cliques.

At one elimination step the driver collects, for every partner ``u_j``, the
maximal cliques of the block ``G[N_H(u_j)]``. A candidate can be maximal in
its own block yet be a proper subset of a candidate from another block, or of
a clique the leaf extension just produced (a *reference*). The filters here
drop exactly those dominated candidates.

:func:`double_scan` works on two ordered prefix trees: a forward tree keyed by
the block ordering and a reverse tree keyed by its mirror. Forward prefixes,
reverse prefixes and a final set-trie superset query on the forward tree
together decide domination. :func:`exact_filter` checks maximality against
the graph directly, and :func:`curing_filter` is the subset-probing baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .kernels import CliqueList, KernelStats, is_maximal_in

CAND = 1
REF = 2
CURING_MAX = 30


class CuringRefusal(ValueError):
    """Raised when a clique is too large for exhaustive subset probing."""


@dataclass
class FilterStats:
    candidates: int = 0
    duplicates: int = 0
    trie_ops: int = 0
    forward_unmarks: int = 0
    check_size: int = 0
    check_unmarks: int = 0
    completion_rejects: int = 0
    curing_probes: int = 0
    exact_ops: int = 0

    @property
    def ops(self):
        return self.trie_ops + self.curing_probes + self.exact_ops

    def add(self, other):
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))


# block ordering ---------------------------------------------------------------


class BlockOrdering:
    """Ranks vertices by the first block they appear in.

    Within a block, unseen vertices are ranked by ascending id.
    """

    def __init__(self):
        self.rank = {}
        self.blocks = []

    def add_block(self, u, vertices):
        fresh = []
        rank = self.rank
        for x in sorted(vertices):
            if x not in rank:
                rank[x] = len(rank)
                fresh.append(x)
        self.blocks.append((u, tuple(fresh)))

    def sort(self, k):
        return tuple(sorted(k, key=self.rank.__getitem__))

    def __len__(self):
        return len(self.rank)


def build_sigma_c(candidate_blocks):
    """Block ordering for ``[(u_1, B_1), (u_2, B_2), ...]`` in the given order."""
    ordering = BlockOrdering()
    for u, vertices in candidate_blocks:
        ordering.add_block(u, vertices)
    return ordering


# prefix tree ------------------------------------------------------------------


class _Node:
    __slots__ = ("label", "children", "mark")

    def __init__(self, label):
        self.label = label
        self.children = {}
        self.mark = 0


class CliqueTrie:
    """Prefix tree over rank-increasing vertex sequences with terminal marks."""

    def __init__(self, rank, reverse=False):
        self.rank = rank
        self.reverse = reverse
        self.root = _Node(None)
        self.node_count = 0
        self.ops = 0

    def _key(self, x):
        r = self.rank[x]
        return -r if self.reverse else r

    def _check_monotone(self, k):
        key = self._key
        for a, b in zip(k, k[1:]):
            if key(a) >= key(b):
                raise ValueError(f"sequence {k!r} is not increasing in the trie order")

    def insert(self, k, mark=CAND):
        self._check_monotone(k)
        node = self.root
        for x in k:
            self.ops += 1
            child = node.children.get(x)
            if child is None:
                child = node.children[x] = _Node(x)
                self.node_count += 1
            node = child
        fresh = not (node.mark & mark)
        node.mark |= mark
        return fresh

    def find(self, k):
        node = self.root
        for x in k:
            self.ops += 1
            node = node.children.get(x)
            if node is None:
                return None
        return node

    def marked_proper_prefixes(self, k):
        node = self.root
        out = []
        for i, x in enumerate(k[:-1]):
            self.ops += 1
            node = node.children.get(x)
            if node is None:
                break
            if node.mark:
                out.append(k[: i + 1])
        return out

    def unmark_proper_prefixes(self, k):
        node = self.root
        cleared = 0
        for x in k[:-1]:
            self.ops += 1
            node = node.children.get(x)
            if node is None:
                raise ValueError(f"sequence {k!r} is not stored in the trie")
            if node.mark:
                node.mark = 0
                cleared += 1
        return cleared

    def unmark(self, k):
        node = self.find(k)
        if node is not None and node.mark:
            node.mark = 0
            return True
        return False

    def walk(self):
        """Yield ``(sequence, node)`` for every node, depth first."""
        stack = [(self.root, ())]
        while stack:
            node, path = stack.pop()
            for x, child in node.children.items():
                self.ops += 1
                p = path + (x,)
                yield p, child
                stack.append((child, p))

    def surviving(self, mark=CAND):
        return sorted(
            (p for p, node in self.walk() if node.mark & mark and not node.children),
            key=lambda p: [self._key(x) for x in p],
        )

    def has_proper_superset(self, k):
        """Whether some stored sequence strictly contains the set ``k``.

        Every node lies on the path of an inserted sequence, so it suffices to
        find a node path that covers ``k`` and is longer than ``k``.
        """
        key = self._key
        targets = [key(x) for x in k]
        size = len(k)
        stack = [(self.root, 0, 0)]
        while stack:
            node, idx, depth = stack.pop()
            if idx == size:
                if depth > size or node.children:
                    return True
                continue
            want = targets[idx]
            for x, child in node.children.items():
                self.ops += 1
                r = key(x)
                if r == want:
                    stack.append((child, idx + 1, depth + 1))
                elif r < want:
                    stack.append((child, idx, depth + 1))
        return False


def trie_insert(t, k):
    return t.insert(tuple(k))


def unmark_proper_prefixes(t, k):
    return t.unmark_proper_prefixes(tuple(k))


def surviving_cliques(t):
    return t.surviving()


# filters ----------------------------------------------------------------------


def _block_cliques(block):
    u, cl = block
    return cl.cliques if isinstance(cl, CliqueList) else list(cl)


def _ordering_for(blocks, references):
    ordering = BlockOrdering()
    for b in blocks:
        vs = set()
        for k in _block_cliques(b):
            vs.update(k)
        ordering.add_block(b[0], vs)
    if references:
        vs = set()
        for k in references:
            vs.update(k)
        ordering.add_block(None, vs)
    return ordering


def _result(cliques, tag, stats):
    out = sorted(tuple(sorted(k)) for k in cliques)
    return CliqueList(out, tag, KernelStats(emitted=len(out), ops=stats.ops))


def double_scan(blocks, ordering=None, references=(), complete=True, stats=None):
    """Maximal cliques of the step's local graph among the block candidates.

    ``blocks`` is ``[(u_j, cliques_j), ...]`` in partner order; ``references``
    are cliques that may dominate candidates but are never reported. With
    ``complete=False`` only the two prefix scans run, which misses
    containments that are neither forward nor reverse prefixes.
    """
    stats = stats if stats is not None else FilterStats()
    references = [tuple(k) for k in references]
    if ordering is None:
        ordering = _ordering_for(blocks, references)
    else:
        missing = {x for k in references for x in k if x not in ordering.rank}
        if missing:
            ordering.add_block(None, missing)
    rank = ordering.rank

    t_start = CliqueTrie(rank)
    for b in blocks:
        for k in _block_cliques(b):
            stats.candidates += 1
            seq = ordering.sort(k)
            if not t_start.insert(seq, CAND):
                stats.duplicates += 1
            stats.forward_unmarks += t_start.unmark_proper_prefixes(seq)
    for k in references:
        seq = ordering.sort(k)
        t_start.insert(seq, REF)
        stats.forward_unmarks += t_start.unmark_proper_prefixes(seq)

    t_end = CliqueTrie(rank, reverse=True)
    check = set()
    seqs = [ordering.sort(k)[::-1] for k in references]
    for b in reversed(blocks):
        seqs.extend(ordering.sort(k)[::-1] for k in _block_cliques(b))
    for seq in seqs:
        t_end.insert(seq, CAND)
        for p in t_end.marked_proper_prefixes(seq):
            check.add(p[::-1])
    # a shorter clique that arrived after its extension is marked but internal
    for p, node in t_end.walk():
        if node.mark and node.children:
            check.add(p[::-1])
    stats.check_size += len(check)
    for p in check:
        if t_start.unmark(p):
            stats.check_unmarks += 1

    survivors = t_start.surviving(CAND)
    if complete:
        kept = []
        for s in survivors:
            if t_start.has_proper_superset(s):
                stats.completion_rejects += 1
            else:
                kept.append(s)
        survivors = kept
    stats.trie_ops += t_start.ops + t_end.ops
    return _result(survivors, "doublescan", stats)


def exact_filter(blocks, g, universe, stats=None):
    """Keep a candidate iff it is a maximal clique of ``g[universe]``."""
    stats = stats if stats is not None else FilterStats()
    universe = universe if isinstance(universe, (set, frozenset)) else set(universe)
    seen = set()
    kept = []
    for b in blocks:
        for k in _block_cliques(b):
            stats.candidates += 1
            fk = frozenset(k)
            if fk in seen:
                stats.duplicates += 1
                continue
            seen.add(fk)
            stats.exact_ops += len(k) + min(len(g.adj[x]) for x in k)
            if is_maximal_in(g, universe, tuple(sorted(k))):
                kept.append(k)
    return _result(kept, "exact", stats)


def curing_filter(candidates, references=(), stats=None, max_size=CURING_MAX):
    """Largest-first subset probing over a membership set.

    Every candidate (and reference) ``K`` probes all of its proper non-empty
    subsets against the candidate set and removes the ones it finds. Reference
    probes are confined to vertices that occur in some candidate.
    """
    stats = stats if stats is not None else FilterStats()
    pool = []
    s = set()
    for k in candidates:
        stats.candidates += 1
        fk = frozenset(k)
        if fk in s:
            stats.duplicates += 1
            continue
        s.add(fk)
        pool.append(fk)
    members = set().union(*pool) if pool else set()
    # (probe set, whether the probe set itself may match)
    visit = [(k, False) for k in pool]
    for k in references:
        fk = frozenset(k)
        inner = fk & members
        visit.append((inner, inner != fk))
    for k, _ in visit:
        if len(k) > max_size:
            raise CuringRefusal(f"clique of size {len(k)} exceeds the curing limit {max_size}")
    visit.sort(key=lambda item: (-len(item[0]), sorted(item[0])))
    survivors = set(pool)
    for k, whole in visit:
        items = sorted(k)
        top = len(items) if whole else len(items) - 1
        for r in range(1, top + 1):
            for sub in combinations(items, r):
                stats.curing_probes += 1
                fs = frozenset(sub)
                if fs in s:
                    survivors.discard(fs)
    return _result(survivors, "cure", stats)


def curing_blocks(blocks, references=(), stats=None):
    cands = [k for b in blocks for k in _block_cliques(b)]
    return curing_filter(cands, references, stats)
