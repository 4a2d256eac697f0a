import itertools

import pytest

from cclique.graph import build_graph


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)], n=n)


def complete(n):
    return build_graph(list(itertools.combinations(range(n), 2)), n=n)


def bipartite(a, b):
    return build_graph([(i, a + j) for i in range(a) for j in range(b)], n=a + b)


def path(n):
    return build_graph([(i, i + 1) for i in range(n - 1)], n=n)


def star(leaves):
    return build_graph([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def brute_closure(g):
    """1 + max common neighbours over non-adjacent pairs, by direct pair scan."""
    best = 0
    for u, v in itertools.combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            best = max(best, len(set(g.adj[u]) & set(g.adj[v])))
    return best + 1


def brute_weak_closure(g):
    """Smallest c admitting an order, by exhaustive search over removal sets."""
    from functools import lru_cache

    def bad(c, alive, v):
        for u in alive:
            if u != v and not g.has_edge(u, v):
                if len(set(g.adj[u]) & set(g.adj[v]) & alive) >= c:
                    return True
        return False

    for c in range(1, brute_closure(g) + 1):
        @lru_cache(maxsize=None)
        def ok(alive):
            if not alive:
                return True
            return any(not bad(c, alive, v) and ok(alive - {v}) for v in alive)

        if ok(frozenset(range(g.n))):
            return c
    raise AssertionError("unreachable")


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k33():
    return bipartite(3, 3)


@pytest.fixture
def p3():
    return path(3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
