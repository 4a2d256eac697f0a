import json
import random

import pytest

from cclique import closure
from cclique.driver import (
    RunMetrics,
    SolutionForest,
    check_bounds,
    enumerate_cclosed,
    extend_leaves,
)
from cclique.generators import gnp, moon_moser, planted_cclosed
from cclique.graph import build_graph
from cclique.kernels import oracle_enumerate, pivot_enumerate
from conftest import complete, cycle

COMBOS = [
    dict(mode="improved", filter=f, kernel=k) for f in ("doublescan", "exact", "cure") for k in ("tomita", "outsens")
] + [dict(mode="baseline")]


def test_single_vertex():
    f, m = enumerate_cclosed(build_graph([], n=1))
    assert f.cliques() == [(0,)] and len(f.roots) == 1 and m.alpha == 1 and m.base_cases == 1


def test_empty_graph():
    f, m = enumerate_cclosed(build_graph([], n=0))
    assert f.cliques() == [] and m.alpha == 0


@pytest.mark.parametrize("kw", COMBOS)
def test_c5(kw):
    g = cycle(5)
    for order in (None, "auto", [4, 2, 0, 3, 1]):
        f, m = enumerate_cclosed(g, order=order, **kw)
        assert f.cliques() == sorted(oracle_enumerate(g).cliques)
        assert all(len(SolutionForest.path(leaf)) == 2 for leaf in f.leaves)


def test_moon_moser_depth():
    f, m = enumerate_cclosed(moon_moser(3), order="auto")
    assert m.alpha == 27 and m.c == 7
    assert all(len(SolutionForest.path(leaf)) == 3 for leaf in f.leaves)
    assert all(b.holds for b in m.bound_checks)


def test_reference_domination_in_run():
    # 0 sees 1 and 2, which form an edge; 3 hangs off 1. The block {1} of the
    # pair (0, 3) yields candidate {1}, dominated by the grown leaf {1, 2}.
    g = build_graph([(0, 1), (0, 2), (1, 2), (1, 3)])
    for kw in COMBOS:
        f, _ = enumerate_cclosed(g, **kw)
        assert f.cliques() == [(0, 1, 2), (1, 3)]


def test_argument_errors(c5):
    with pytest.raises(ValueError):
        enumerate_cclosed(c5, order=[0, 1, 2])
    with pytest.raises(ValueError):
        enumerate_cclosed(c5, order="sideways")
    with pytest.raises(ValueError):
        enumerate_cclosed(c5, filter="sieve")
    with pytest.raises(ValueError):
        enumerate_cclosed(c5, mode="baseline", filter="doublescan")
    with pytest.raises(ValueError):
        enumerate_cclosed(c5, c=1)  # identity is not a weak order at c=1


def test_extend_leaves():
    f = SolutionForest()
    f.add_tree(2)
    assert extend_leaves(f, 1, {2}) == 1
    assert [SolutionForest.path(x) for x in f.leaves] == [[2, 1]]
    f = SolutionForest()
    f.add_tree(2, [(3,)])
    assert extend_leaves(f, 1, {2}) == 0
    f = SolutionForest()
    f.add_tree(2)
    f.add_tree(3)
    assert extend_leaves(f, 1, {2, 3}) == 2


def test_forest_shares_prefixes():
    f = SolutionForest()
    root = f.add_tree(9, [(1, 2), (1, 3)])
    assert list(root.children) == [1] and len(f) == 2


@pytest.mark.parametrize(
    "g,c,alpha",
    [(cycle(5), 2, 5), (complete(4), 1, 1), (moon_moser(3), 7, 27)],
)
def test_check_bounds_examples(g, c, alpha):
    _, m = enumerate_cclosed(g, order="auto")
    assert m.alpha == alpha
    checks = check_bounds(m, g.n, c)
    assert checks[0].lhs == alpha and checks[0].rhs == pytest.approx(3 ** ((c - 1) / 3) * g.n**2)
    assert all(b.holds for b in checks)


def test_explicit_c_arms_bounds():
    g = planted_cclosed(120, 6, 3)
    order = closure.weak_closure_order(g, 6)
    f, m = enumerate_cclosed(g, order=order, c=6)
    assert m.c == 6 and m.max_block_size < 6 and all(b.holds for b in m.bound_checks)
    assert set(f.cliques()) == set(pivot_enumerate(g).cliques)


def test_counter_identities():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 16)
        g = gnp(n, rng.random(), rng.randrange(10**6))
        f, m = enumerate_cclosed(g, order="auto")
        assert m.alpha == len(f) == len(set(f.cliques()))
        assert len(m.alpha_i) == len(m.beta_i) == n
        assert all(a <= b for a, b in zip(m.alpha_i, m.beta_i))


def test_direct_blocks_match_index():
    g = gnp(40, 0.25, 9)
    a, ma = enumerate_cclosed(g, order="auto")
    b, mb = enumerate_cclosed(g, order="auto", direct=True)
    assert a.cliques() == b.cliques() and ma.beta_i == mb.beta_i


def test_metrics_round_trip():
    _, m = enumerate_cclosed(gnp(15, 0.4, 1), order="auto")
    text = m.dumps()
    back = RunMetrics.from_json(json.loads(text))
    assert back == m and back.dumps() == text
    assert list(json.loads(text))[:4] == ["n", "mode", "filter_mode", "kernel"]
