from __future__ import annotations

import pytest
from hypothesis import given

from cliquesuite import (
    Graph,
    bb_colour,
    bbmc_search,
    brute_force_omega,
    build_bit_neighbourhoods,
    gen_gnp,
    mcsa_search,
    number_sort,
)
from conftest import complete, edgeless, graphs, path


def bits(x: int) -> set[int]:
    return {i for i in range(x.bit_length()) if x >> i & 1}


def test_triangle():
    nb = build_bit_neighbourhoods(complete(3), 1)
    for i in range(3):
        assert bin(nb.n_bits[i]).count("1") == 2
        assert nb.inv_n[i] == 1 << i


def test_edgeless():
    nb = build_bit_neighbourhoods(edgeless(4), 2)
    assert nb.n_bits == (0, 0, 0, 0)
    assert nb.inv_n == (0b1111,) * 4


def test_path_renaming():
    nb = build_bit_neighbourhoods(path(4), 1)
    assert [r.index for r in nb.renaming] == [1, 2, 0, 3]
    assert bits(nb.n_bits[0]) == {1, 2}
    assert nb.original(nb.n_bits[0]) == [2, 0]


def test_colour_complete():
    nb = build_bit_neighbourhoods(complete(4), 1)
    assert bb_colour(0b1111, nb).colour == [1, 2, 3, 4]


def test_colour_edgeless():
    nb = build_bit_neighbourhoods(edgeless(5), 1)
    cr = bb_colour(0b11111, nb)
    assert cr.ordered == [0, 1, 2, 3, 4] and cr.colour == [1] * 5


def test_colour_matches_number_sort_on_path():
    g = path(4)
    nb = build_bit_neighbourhoods(g, 1)
    order = [r.index for r in nb.renaming]
    cr = bb_colour(0b1111, nb)
    ns = number_sort(g, order)
    assert [nb.renaming[v].index for v in cr.ordered] == ns.ordered
    assert cr.colour == ns.colour


@given(graphs(max_n=18))
def test_colour_matches_number_sort(g):
    for style in (1, 2, 3):
        nb = build_bit_neighbourhoods(g, style)
        order = [r.index for r in nb.renaming]
        cr = bb_colour((1 << g.n) - 1, nb)
        ns = number_sort(g, order)
        assert [nb.renaming[v].index for v in cr.ordered] == ns.ordered
        assert cr.colour == ns.colour


@pytest.mark.parametrize("style", [1, 2, 3])
def test_small_graphs(style):
    assert bbmc_search(complete(5), style).max_size == 5
    assert bbmc_search(edgeless(4), style).max_size == 1
    assert bbmc_search(edgeless(0), style).max_size == 0


def test_solution_in_original_ids():
    g = Graph.from_edges(6, [(3, 4), (4, 5), (3, 5), (0, 1)])
    out = bbmc_search(g, 1)
    assert out.clique == [3, 4, 5]


@pytest.mark.parametrize("style", [1, 2, 3])
@pytest.mark.parametrize("seed", range(4))
def test_same_tree_as_mcsa(style, seed):
    g = gen_gnp(60, 0.5 + 0.1 * seed, seed)
    a, b = mcsa_search(g, style), bbmc_search(g, style)
    assert (a.nodes, a.max_size) == (b.nodes, b.max_size)


@given(graphs(max_n=16))
def test_matches_brute_force(g):
    omega = brute_force_omega(g)
    for style in (1, 2, 3):
        out = bbmc_search(g, style)
        assert out.max_size == omega and g.is_clique(out.solution)
        assert len(out.solution) == omega
