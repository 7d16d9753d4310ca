from __future__ import annotations

from itertools import combinations

from hypothesis import settings
from hypothesis import strategies as st

from cliquesuite import Graph

# solver run times vary with the drawn graph; don't let that flake a test
settings.register_profile("cliquesuite", deadline=None)
settings.load_profile("cliquesuite")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), name=f"K{n}")


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [], name=f"E{n}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, name="petersen")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 16):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, bits) if keep])


@st.composite
def graphs_with_order(draw, min_n: int = 0, max_n: int = 16):
    g = draw(graphs(min_n, max_n))
    order = draw(st.permutations(range(g.n)))
    return g, list(order)
