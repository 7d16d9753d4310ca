from __future__ import annotations

import time

import pytest
from hypothesis import given, settings

from cliquesuite import SearchBudget, brute_force_omega, gen_gnp, mc_search
from cliquesuite.search import MC, Search
from conftest import complete, cycle, edgeless, graphs


def test_complete():
    out = mc_search(complete(5))
    assert out.max_size == 5
    assert out.clique == [0, 1, 2, 3, 4]
    assert out.completed


def test_edgeless():
    out = mc_search(edgeless(6))
    assert out.max_size == 1 and len(out.solution) == 1


def test_cycle():
    assert mc_search(cycle(5)).max_size == 2


def test_empty_graph():
    out = mc_search(edgeless(0))
    assert out.max_size == 0 and out.solution == frozenset()


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_unbounded_tree_on_complete_graph_is_binomial(n):
    # expand on a k-set calls expand on each of its proper prefixes
    assert MC(complete(n), size_bound=False).search().nodes == 2 ** (n - 1)


def test_bound_prunes():
    assert mc_search(complete(9)).nodes < 2**8


class TestSaveSolution:
    def test_replaces_champion(self):
        s = Search(complete(5))
        s.save_solution([0, 1, 2])
        s.save_solution([0, 1, 2, 3])
        assert s.max_size == 4 and s.solution == {0, 1, 2, 3}

    def test_first_save_from_empty(self):
        s = Search(complete(3))
        assert s.max_size == 0
        s.save_solution([2])
        assert s.max_size == 1


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(-1)
    assert SearchBudget.seconds(None).time_limit_ms == 0
    assert SearchBudget.seconds(1.5).time_limit_ms == 1500


def test_time_limit_returns_best_so_far():
    g = gen_gnp(200, 0.9, 1)
    start = time.perf_counter()
    out = mc_search(g, SearchBudget(50))
    assert not out.completed
    assert time.perf_counter() - start < 5
    assert out.max_size > 0 and g.is_clique(out.solution)


def test_deterministic():
    g = gen_gnp(40, 0.6, 2)
    a, b = mc_search(g), mc_search(g)
    assert (a.nodes, a.solution) == (b.nodes, b.solution)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=18))
def test_matches_brute_force(g):
    out = mc_search(g)
    assert out.max_size == brute_force_omega(g)
    assert g.is_clique(out.solution) and len(out.solution) == out.max_size
