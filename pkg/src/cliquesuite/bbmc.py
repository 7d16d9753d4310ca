"""Bit-parallel BBMC.

Vertices are renamed once, at the top of search, so that bit ``i`` stands
for the ``i``-th vertex of the initial order. Python ints serve as the bit
strings: ``&``, ``^`` and ``x & -x`` give intersection, removal and the
lowest set bit without any word bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colour import ColourResult
from .graph import Graph
from .ordering import VertexRecord, order_by_style
from .search import UNLIMITED, Search, SearchBudget, SearchOutcome


@dataclass(frozen=True)
class BitNeighbourhoods:
    """Renamed adjacency rows ``N`` and their complements ``inv_n`` over ``n`` bits."""

    n_bits: tuple[int, ...]
    inv_n: tuple[int, ...]
    renaming: tuple[VertexRecord, ...]

    @property
    def n(self) -> int:
        return len(self.renaming)

    def original(self, bits: int) -> list[int]:
        """Original vertex ids of the set bits, in bit order."""
        out = []
        while bits:
            low = bits & -bits
            out.append(self.renaming[low.bit_length() - 1].index)
            bits ^= low
        return out


def build_bit_neighbourhoods(g: Graph, style: int) -> BitNeighbourhoods:
    renaming = order_by_style(g, style)
    n = g.n
    full = (1 << n) - 1
    position = [0] * n
    for i, r in enumerate(renaming):
        position[r.index] = i
    rows = []
    for r in renaming:
        row = 0
        for w in g.neighbours(r.index):
            row |= 1 << position[w]
        rows.append(row)
    return BitNeighbourhoods(tuple(rows), tuple(full ^ row for row in rows), tuple(renaming))


def bb_colour(P: int, nbhd: BitNeighbourhoods) -> ColourResult:
    """Colour-class-at-a-time colouring of the bit set ``P``.

    Each class greedily takes the lowest remaining bit and discards its
    neighbours, so colours come out already sorted.
    """
    inv_n = nbhd.inv_n
    ordered: list[int] = []
    colour: list[int] = []
    rest = P
    c = 0
    while rest:
        c += 1
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            rest ^= low
            q = (q ^ low) & inv_n[v]
            ordered.append(v)
            colour.append(c)
    return ColourResult(ordered, colour)


class BBMC(Search):
    def __init__(self, g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED):
        super().__init__(g, budget)
        self.style = style
        self.nbhd: BitNeighbourhoods | None = None

    def _run(self) -> None:
        self.nbhd = build_bit_neighbourhoods(self.g, self.style)
        if self.g.n:
            self._expand(0, 0, (1 << self.g.n) - 1)

    def save_solution(self, clique_bits: int) -> None:
        self.solution = frozenset(self.nbhd.original(clique_bits))
        self.max_size = len(self.solution)

    def _expand(self, C: int, size: int, P: int) -> None:
        self._tick()
        nbhd = self.nbhd
        n_bits, inv_n = nbhd.n_bits, nbhd.inv_n
        # bb_colour inlined: this is the hot loop
        ordered: list[int] = []
        colour: list[int] = []
        rest = P
        c = 0
        while rest:
            c += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                rest ^= low
                q = (q ^ low) & inv_n[v]
                ordered.append(v)
                colour.append(c)
        size1 = size + 1
        for i in range(len(ordered) - 1, -1, -1):
            if size + colour[i] <= self.max_size:
                return
            v = ordered[i]
            bit = 1 << v
            new_p = P & n_bits[v]
            if not new_p and size1 > self.max_size:
                self.save_solution(C | bit)
            if new_p:
                self._expand(C | bit, size1, new_p)
            P ^= bit


def bbmc_search(g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    return BBMC(g, style, budget).search()
