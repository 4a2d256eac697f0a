import pytest
from hypothesis import given, settings, strategies as st

from cclique import closure
from cclique.generators import gnp
from conftest import bipartite, brute_closure, brute_weak_closure, complete, cycle, path


@pytest.mark.parametrize("g,c", [(complete(4), 1), (cycle(5), 2), (bipartite(3, 3), 4)])
def test_closure_number(g, c):
    assert closure.closure_number(g) == c == brute_closure(g)


def test_bad_pairs_p3(p3):
    assert closure.bad_pairs(p3, 1) == [closure.BadPair(0, 2, 1)]
    assert closure.bad_pairs(p3, 2) == []
    assert closure.bad_pairs(complete(4), 1) == []


def test_weak_order_p3(p3):
    assert closure.weak_closure_order(p3, 1)[0] == 1
    assert closure.is_weak_order(p3, 1, (1, 0, 2))
    assert not closure.is_weak_order(p3, 1, (0, 1, 2))


def test_c4_fails_then_succeeds():
    c4 = cycle(4)
    assert closure.weak_closure_order(c4, 2) is None
    assert closure.weak_closure_order(c4, 3) is not None
    failures = {}
    c, order = closure.weak_closure_number(c4, failures=failures)
    assert c == 3 and closure.is_weak_order(c4, 3, order)
    assert failures == {1: 0, 2: 0}


@pytest.mark.parametrize("g,c", [(path(3), 1), (cycle(4), 3), (cycle(5), 2)])
def test_weak_closure_number(g, c):
    got, order = closure.weak_closure_number(g)
    assert got == c == brute_weak_closure(g)
    assert closure.is_weak_order(g, c, order)


def test_any_order_valid_at_closure_number(k33):
    c = closure.closure_number(k33)
    assert closure.is_weak_order(k33, c, [5, 3, 1, 0, 2, 4])


def test_bad_c():
    with pytest.raises(ValueError):
        closure.weak_closure_order(cycle(3), 0)


def test_report_json(c5):
    rep = closure.analyze(c5)
    d = rep.to_json()
    assert d["closure_c"] == 2 and d["weak_c"] == 2
    assert d["bad_pair_count_at"] == {"1": 5, "2": 0}


def test_methods_agree_on_larger_graph():
    g = gnp(300, 0.05, 3)
    c = closure.closure_number(g)
    for level in range(1, c + 1):
        a = closure.weak_closure_order(g, level, method="incremental")
        b = closure.weak_closure_order(g, level, method="recompute")
        assert a == b


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 11), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_properties(n, p, seed):
    g = gnp(n, p, seed)
    c = closure.closure_number(g)
    assert c == brute_closure(g)
    weak, order = closure.weak_closure_number(g)
    assert weak <= c
    assert weak == brute_weak_closure(g)
    assert closure.is_weak_order(g, weak, order)
    assert closure.bad_pairs(g, c) == []
    if c > 1:
        assert closure.bad_pairs(g, c - 1)
    assert closure.weak_closure_order(g, c + 1) is not None
