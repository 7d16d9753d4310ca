"""Greedy sequential colouring bounds and the MCQ / MCSa / MCSb solvers.

MCQ colours each candidate set in its own current order. MCSa colours in a
static order fixed at the top of search. MCSb is MCSa plus colour repair:
when a vertex opens a colour class that matters to the bound, it tries to
push the vertex down by relocating its single conflicting neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .ordering import order_by_style
from .search import UNLIMITED, Search, SearchBudget, SearchOutcome


@dataclass
class ColourResult:
    ordered: list[int]
    colour: list[int]

    @property
    def colours_used(self) -> int:
        return self.colour[-1] if self.colour else 0


class ColourClasses:
    """Mutable colour classes; ``classes[c]`` holds the vertices of colour ``c + 1``.

    Each class keeps an int mask alongside its member list so that conflict
    tests are a single ``&``.
    """

    __slots__ = ("g", "classes", "masks", "class_of", "coloured")

    def __init__(self, g: Graph):
        self.g = g
        self.classes: list[list[int]] = []
        self.masks: list[int] = []
        self.class_of: dict[int, int] = {}
        self.coloured = 0

    def __len__(self) -> int:
        return len(self.classes)

    def conflicts(self, v: int, k: int) -> bool:
        return bool(self.masks[k] & self.g.masks[v])

    def add(self, v: int, k: int) -> None:
        if k == len(self.classes):
            self.classes.append([])
            self.masks.append(0)
        self.classes[k].append(v)
        self.masks[k] |= 1 << v
        self.class_of[v] = k
        self.coloured |= 1 << v

    def remove(self, v: int, k: int) -> None:
        self.classes[k].remove(v)
        self.masks[k] &= ~(1 << v)
        del self.class_of[v]
        self.coloured &= ~(1 << v)

    def first_fit(self, v: int) -> int:
        """Index of the first class ``v`` may join (possibly a new one)."""
        row = self.g.masks[v]
        masks = self.masks
        top = len(masks)
        if top and not masks[-1]:
            # only the top class can be empty, after a repair
            top -= 1
        # a free non-empty class consists of non-neighbours of v, so when
        # those are few it is cheaper to test just their classes
        others = self.g.inv_masks[v] & self.coloured
        if others.bit_count() < top:
            best = top
            class_of = self.class_of
            while others:
                low = others & -others
                others ^= low
                k = class_of[low.bit_length() - 1]
                if k < best and not masks[k] & row:
                    best = k
            return best
        for k in range(top):
            if not masks[k] & row:
                return k
        return top

    def flatten(self) -> ColourResult:
        ordered: list[int] = []
        colour: list[int] = []
        c = 0
        for members in self.classes:
            if not members:
                continue
            c += 1
            ordered.extend(members)
            colour.extend([c] * len(members))
        return ColourResult(ordered, colour)


def get_single_conflict_vertex(g: Graph, v: int, members: list[int]) -> int | None:
    """The only member of ``members`` adjacent to ``v``, or None if there are zero or several."""
    row = g.masks[v]
    found = None
    for w in members:
        if row >> w & 1:
            if found is not None:
                return None
            found = w
    return found


def repair(g: Graph, v: int, k: int, cc: ColourClasses) -> bool:
    """Try to move ``v`` out of class ``k``.

    Scans classes ``i < k - 1`` for one where ``v`` has a single conflict
    ``w``, then classes ``i < j < k`` for one where ``w`` has none. On the
    first hit ``v`` goes to ``i`` and ``w`` to ``j``.
    """
    for i in range(k - 1):
        w = get_single_conflict_vertex(g, v, cc.classes[i])
        if w is None:
            continue
        for j in range(i + 1, k):
            if not cc.conflicts(w, j):
                cc.remove(v, k)
                cc.remove(w, i)
                cc.add(v, i)
                cc.add(w, j)
                return True
    return False


def colour_classes(g: Graph, col_ord, bound: int = 0, repair_enabled: bool = False) -> ColourClasses:
    cc = ColourClasses(g)
    for v in col_ord:
        k = cc.first_fit(v)
        cc.add(v, k)
        if repair_enabled and k + 1 > bound and len(cc.classes[k]) == 1:
            repair(g, v, k, cc)
    return cc


def number_sort(g: Graph, col_ord, bound: int = 0, repair_enabled: bool = False) -> ColourResult:
    """Greedy first-fit colouring of ``col_ord`` in that order, pigeonhole-sorted by colour.

    With ``repair_enabled``, a vertex that opens class ``k`` with
    ``k + 1 > bound`` triggers :func:`repair`.
    """
    return colour_classes(g, col_ord, bound, repair_enabled).flatten()


class MCQ(Search):
    """Colours every candidate set in its own current order (style 3 is MCR)."""

    def __init__(self, g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED):
        super().__init__(g, budget)
        self.style = style

    def _run(self) -> None:
        P = [r.index for r in order_by_style(self.g, self.style)]
        self._expand([], P)

    def _expand(self, C: list[int], P: list[int]) -> None:
        self._tick()
        cr = number_sort(self.g, P)
        ordered, colour = cr.ordered, cr.colour
        masks = self.g.masks
        for i in range(len(ordered) - 1, -1, -1):
            if len(C) + colour[i] <= self.max_size:
                return
            v = ordered[i]
            C.append(v)
            row = masks[v]
            new_p = [u for u in ordered[:i] if row >> u & 1]
            if not new_p and len(C) > self.max_size:
                self.save_solution(C)
            if new_p:
                self._expand(C, new_p)
            C.pop()


class MCSa(Search):
    """Colours in the static initial order, filtered alongside the candidate set."""

    repair_enabled = False

    def __init__(self, g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED):
        super().__init__(g, budget)
        self.style = style

    def _run(self) -> None:
        col_ord = [r.index for r in order_by_style(self.g, self.style)]
        self._expand([], col_ord)

    def _colour(self, C: list[int], col_ord: list[int]) -> ColourResult:
        return number_sort(self.g, col_ord)

    def _expand(self, C: list[int], col_ord: list[int]) -> None:
        self._tick()
        cr = self._colour(C, col_ord)
        ordered, colour = cr.ordered, cr.colour
        masks = self.g.masks
        # candidates not yet rejected at this level
        live = 0
        for u in ordered:
            live |= 1 << u
        for i in range(len(ordered) - 1, -1, -1):
            if len(C) + colour[i] <= self.max_size:
                return
            v = ordered[i]
            live &= ~(1 << v)
            C.append(v)
            keep = masks[v] & live
            if not keep and len(C) > self.max_size:
                self.save_solution(C)
            if keep:
                self._expand(C, [w for w in col_ord if keep >> w & 1])
            C.pop()


class MCSb(MCSa):
    """MCSa with colour repair."""

    repair_enabled = True

    def _colour(self, C: list[int], col_ord: list[int]) -> ColourResult:
        return number_sort(self.g, col_ord, self.max_size - len(C), True)


def mcq_search(g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    return MCQ(g, style, budget).search()


def mcsa_search(g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    return MCSa(g, style, budget).search()


def mcsb_search(g: Graph, style: int = 1, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    return MCSb(g, style, budget).search()
