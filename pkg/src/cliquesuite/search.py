"""Search bookkeeping shared by every solver, and the baseline MC solver."""

from __future__ import annotations

import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class SearchBudget:
    """Wall-clock limit for one search; ``0`` means unlimited."""

    time_limit_ms: int = 0

    def __post_init__(self):
        if self.time_limit_ms < 0:
            raise ValueError("time limit must be non-negative")

    @classmethod
    def seconds(cls, s: float | None) -> SearchBudget:
        return cls(0 if not s else int(round(s * 1000)))


UNLIMITED = SearchBudget()


@dataclass(frozen=True)
class SearchOutcome:
    max_size: int
    solution: frozenset[int]
    nodes: int
    elapsed_ms: float
    completed: bool

    @property
    def clique(self) -> list[int]:
        return sorted(self.solution)


class TimeLimitExceeded(Exception):
    """Unwinds the recursion once the budget is spent."""


class Search:
    """Champion, node counter and time limit for one run.

    Subclasses implement :meth:`_run`, calling :meth:`_tick` on entry to
    every expand and :meth:`save_solution` on every strictly larger maximal
    clique.
    """

    def __init__(self, g: Graph, budget: SearchBudget = UNLIMITED):
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.max_size = 0
        self.solution: frozenset[int] = frozenset()
        self._deadline = 0.0

    def save_solution(self, clique) -> None:
        # callers only get here on a strict improvement
        self.solution = frozenset(clique)
        self.max_size = len(self.solution)

    def _tick(self) -> None:
        if self._deadline and time.perf_counter() >= self._deadline:
            raise TimeLimitExceeded
        self.nodes += 1

    def search(self) -> SearchOutcome:
        start = time.perf_counter()
        if self.budget.time_limit_ms:
            self._deadline = start + self.budget.time_limit_ms / 1000.0
        completed = True
        with _recursion_headroom(self.g.n + 200):
            try:
                self._run()
            except TimeLimitExceeded:
                completed = False
        elapsed = (time.perf_counter() - start) * 1000.0
        return SearchOutcome(self.max_size, self.solution, self.nodes, elapsed, completed)

    def _run(self) -> None:
        raise NotImplementedError


@contextmanager
def _recursion_headroom(depth: int):
    old = sys.getrecursionlimit()
    if depth + 100 > old:
        sys.setrecursionlimit(depth + 100)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class MC(Search):
    """Binomial backtracking with the ``|C| + |P|`` bound."""

    def __init__(self, g: Graph, budget: SearchBudget = UNLIMITED, size_bound: bool = True):
        super().__init__(g, budget)
        # disabling the bound is a debug switch for tree-shape checks
        self.size_bound = size_bound

    def _run(self) -> None:
        self._expand([], list(range(self.g.n)))

    def _expand(self, C: list[int], P: list[int]) -> None:
        self._tick()
        masks = self.g.masks
        for i in range(len(P) - 1, -1, -1):
            if self.size_bound and len(C) + len(P) <= self.max_size:
                return
            v = P[i]
            C.append(v)
            row = masks[v]
            new_p = [w for w in P if row >> w & 1]
            if not new_p and len(C) > self.max_size:
                self.save_solution(C)
            if new_p:
                self._expand(C, new_p)
            C.pop()
            P.pop()


def mc_search(g: Graph, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    return MC(g, budget).search()
