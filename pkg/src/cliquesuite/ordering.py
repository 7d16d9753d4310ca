"""Initial vertex orderings used at the top of every colour-bounded search.

Style 1 sorts by non-increasing degree, style 2 is the minimum width
(smallest last, degeneracy) order and style 3 sorts by non-increasing degree
with ties broken on the summed degree of the neighbourhood. Every order ends
in a comparison on vertex index so the result never depends on sort
stability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

STYLES = (1, 2, 3)


@dataclass(frozen=True)
class VertexRecord:
    index: int
    degree: int
    neb_deg: int


def vertex_records(g: Graph) -> list[VertexRecord]:
    """One record per vertex, in index order."""
    deg = g.degree
    return [
        VertexRecord(v, deg[v], sum(deg[w] for w in g.neighbours(v))) for v in range(g.n)
    ]


def check_style(style: int) -> int:
    if style not in STYLES:
        raise ValueError(f"ordering style must be one of {STYLES}, got {style!r}")
    return style


def order_by_style(g: Graph, style: int) -> list[VertexRecord]:
    check_style(style)
    records = vertex_records(g)
    if style == 1:
        return sorted(records, key=lambda r: (-r.degree, r.index))
    if style == 3:
        return sorted(records, key=lambda r: (-r.degree, -r.neb_deg, r.index))
    return min_width_order(g, records)


def min_width_order(g: Graph, records: list[VertexRecord] | None = None) -> list[VertexRecord]:
    """Smallest-last order.

    Repeatedly strip a vertex of minimum residual degree (the first such
    vertex in index order among the survivors), then reverse the removal
    sequence.
    """
    if records is None:
        records = vertex_records(g)
    live = sorted(records, key=lambda r: r.index)
    residual = {r.index: r.degree for r in live}
    removed = []
    while live:
        pos = 0
        for i in range(1, len(live)):
            if residual[live[i].index] < residual[live[pos].index]:
                pos = i
        r = live.pop(pos)
        removed.append(r)
        row = g.masks[r.index]
        for u in live:
            if row >> u.index & 1:
                residual[u.index] -= 1
    removed.reverse()
    return removed
