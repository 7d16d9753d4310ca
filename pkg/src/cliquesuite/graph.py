"""Dense undirected graphs, DIMACS clq I/O and random instance generators."""

from __future__ import annotations

import io
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, TextIO

import numpy as np

log = logging.getLogger(__name__)

__all__ = [
    "DimacsFormatError",
    "GenerationError",
    "Graph",
    "GraphSource",
    "gen_gnp",
    "gen_k_regular",
    "gen_small_world",
    "load_dimacs",
    "parse_dimacs",
    "write_dimacs",
]


class DimacsFormatError(ValueError):
    """Raised when a clq stream cannot be read as a graph."""


class GenerationError(RuntimeError):
    """Raised when a randomised generator gives up after its retry budget."""


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adjacent`` is a read-only boolean matrix. ``masks[v]`` holds the same
    row as a Python int (bit ``w`` set iff ``{v, w}`` is an edge); the
    solvers use it for set intersection and conflict tests.
    """

    adjacent: np.ndarray
    masks: tuple[int, ...] = field(repr=False)
    degree: tuple[int, ...] = field(repr=False)
    edge_count: int
    name: str = ""

    @classmethod
    def from_matrix(cls, matrix, name: str = "") -> Graph:
        a = np.array(matrix, dtype=bool, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if a.diagonal().any():
            raise ValueError("self-loops are not allowed")
        a.flags.writeable = False
        degree = tuple(int(d) for d in a.sum(axis=1))
        masks = tuple(_row_mask(row) for row in a)
        return cls(a, masks, degree, sum(degree) // 2, name)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        if n < 0:
            raise ValueError("n must be non-negative")
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            a[u, v] = a[v, u] = True
        return cls.from_matrix(a, name)

    @property
    def n(self) -> int:
        return self.adjacent.shape[0]

    @cached_property
    def inv_masks(self) -> tuple[int, ...]:
        """Non-neighbour rows as ints, excluding the vertex itself."""
        full = (1 << self.n) - 1
        return tuple(full ^ m ^ (1 << v) for v, m in enumerate(self.masks))

    def is_adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return np.flatnonzero(self.adjacent[v]).tolist()

    def edges(self) -> list[tuple[int, int]]:
        """Every edge once as ``(u, v)`` with ``u < v``, in row-major order."""
        us, vs = np.nonzero(np.triu(self.adjacent, k=1))
        return list(zip(us.tolist(), vs.tolist()))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            return False
        return all(self.is_adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def complement(self) -> Graph:
        a = ~self.adjacent
        np.fill_diagonal(a, False)
        return Graph.from_matrix(a, self.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacent, other.adjacent)

    def __hash__(self) -> int:
        return hash((self.n, self.masks))


def _row_mask(row: np.ndarray) -> int:
    # little-endian packbits puts vertex 0 in the least significant bit
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


# --------------------------------------------------------------------------
# DIMACS clq


def parse_dimacs(text: str | TextIO, name: str = "") -> Graph:
    """Read a graph in DIMACS clq format.

    Vertices are renumbered from 0. Comment lines may appear anywhere, the
    edge count on the ``p`` line is ignored, repeated edges collapse and
    self-loops are dropped with a warning.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    n = None
    a = None
    for lineno, raw in enumerate(stream, start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise DimacsFormatError(f"line {lineno}: duplicate 'p' line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsFormatError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise DimacsFormatError(f"line {lineno}: non-integer in 'p' line") from None
            if n < 0:
                raise DimacsFormatError(f"line {lineno}: negative vertex count")
            a = np.zeros((n, n), dtype=bool)
        elif tag == "e":
            if a is None:
                raise DimacsFormatError(f"line {lineno}: 'e' line before 'p' line")
            if len(fields) < 3:
                raise DimacsFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsFormatError(f"line {lineno}: non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsFormatError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                log.warning("line %d: skipping self-loop on vertex %d", lineno, u)
                continue
            a[u - 1, v - 1] = a[v - 1, u - 1] = True
        else:
            raise DimacsFormatError(f"line {lineno}: unknown line type {tag!r}")
    if a is None:
        raise DimacsFormatError("missing 'p edge <n> <m>' line")
    return Graph.from_matrix(a, name)


def load_dimacs(path) -> Graph:
    from pathlib import Path

    path = Path(path)
    with path.open(encoding="utf-8", newline=None) as fh:
        return parse_dimacs(fh, name=path.stem)


def write_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# generators


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each pair ``u < v`` gets an edge with probability ``p``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    draws = _rng(seed).random((n, n))
    a = np.triu(draws < p, k=1)
    return Graph.from_matrix(a | a.T, name=f"gnp-{n}-{p:g}-{seed}")


def gen_k_regular(n: int, k: int, seed: int, max_retries: int = 1000) -> Graph:
    """Uniform-ish random k-regular graph.

    Stubs are paired at random, rejecting loops and multi-edges, and the
    whole pairing restarts when it gets stuck. Dense requests are built as
    the complement of an ``(n-1-k)``-regular graph so pairing stays cheap.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= k < n:
        raise ValueError("k must satisfy 0 <= k < n")
    if n * k % 2:
        raise ValueError("n*k must be even")
    name = f"kr-{n}-{k}-{seed}"
    rng = _rng(seed)
    if k > (n - 1) // 2:
        return Graph.from_matrix(_complement(_pair_stubs(n, n - 1 - k, rng, max_retries)), name)
    return Graph.from_matrix(_pair_stubs(n, k, rng, max_retries), name)


def _complement(a: np.ndarray) -> np.ndarray:
    c = ~a
    np.fill_diagonal(c, False)
    return c


def _pair_stubs(n: int, k: int, rng: np.random.Generator, max_retries: int) -> np.ndarray:
    for _ in range(max_retries):
        a = _try_pairing(n, k, rng)
        if a is not None:
            return a
    raise GenerationError(f"no simple {k}-regular graph on {n} vertices after {max_retries} attempts")


def _try_pairing(n: int, k: int, rng: np.random.Generator) -> np.ndarray | None:
    a = np.zeros((n, n), dtype=bool)
    stubs = [v for v in range(n) for _ in range(k)]
    while stubs:
        order = rng.permutation(len(stubs))
        shuffled = [stubs[i] for i in order]
        left = []
        progress = False
        for u, v in zip(shuffled[0::2], shuffled[1::2]):
            if u == v or a[u, v]:
                left.extend((u, v))
            else:
                a[u, v] = a[v, u] = True
                progress = True
        stubs = left
        if not progress and not _has_suitable_pair(stubs, a):
            return None
    return a


def _has_suitable_pair(stubs: list[int], a: np.ndarray) -> bool:
    vs = sorted(set(stubs))
    return any(not a[u, v] for i, u in enumerate(vs) for v in vs[i + 1 :])


def gen_small_world(n: int, k: int, p: float, seed: int) -> Graph:
    """Watts-Strogatz style ring: each vertex joins its ``k`` right neighbours,
    then each ring edge ``(u, v)`` is rewired with probability ``p`` to
    ``(u, w)`` for a uniform ``w`` that is neither ``u`` nor already adjacent.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0 or 2 * k >= n:
        raise ValueError("k must satisfy 0 <= 2k < n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    a = np.zeros((n, n), dtype=bool)
    ring = [(u, (u + j) % n) for j in range(1, k + 1) for u in range(n)]
    for u, v in ring:
        a[u, v] = a[v, u] = True
    rng = _rng(seed)
    for u, v in ring:
        if p == 0.0 or rng.random() >= p:
            continue
        free = np.flatnonzero(~a[u])
        free = free[free != u]
        if free.size == 0:
            continue
        w = int(free[rng.integers(free.size)])
        a[u, v] = a[v, u] = False
        a[u, w] = a[w, u] = True
    return Graph.from_matrix(a, name=f"sw-{n}-{k}-{p:g}-{seed}")


# --------------------------------------------------------------------------


_SOURCE_KINDS = ("dimacs-file", "gnp", "k-regular", "small-world")


@dataclass(frozen=True)
class GraphSource:
    """Where an instance comes from: a clq file or one of the generators."""

    kind: str
    path: str | None = None
    n: int | None = None
    p: float | None = None
    k: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in _SOURCE_KINDS:
            raise ValueError(f"unknown graph source kind {self.kind!r}")
        if self.kind == "dimacs-file":
            if not self.path:
                raise ValueError("dimacs-file source needs a path")
            return
        if self.n is None or self.n < 1:
            raise ValueError("generated sources need n >= 1")
        if self.kind in ("gnp", "small-world") and (self.p is None or not 0.0 <= self.p <= 1.0):
            raise ValueError("p must lie in [0, 1]")
        if self.kind in ("k-regular", "small-world") and (self.k is None or self.k < 0):
            raise ValueError("k must be a non-negative integer")
        if self.kind == "k-regular" and self.k >= self.n:
            raise ValueError("k must be less than n")
        if self.kind == "small-world" and 2 * self.k >= self.n:
            raise ValueError("2k must be less than n")

    @property
    def label(self) -> str:
        if self.kind == "dimacs-file":
            from pathlib import Path

            return Path(self.path).stem
        if self.kind == "gnp":
            return f"gnp-{self.n}-{self.p:g}-{self.seed}"
        if self.kind == "k-regular":
            return f"kr-{self.n}-{self.k}-{self.seed}"
        return f"sw-{self.n}-{self.k}-{self.p:g}-{self.seed}"

    def load(self) -> Graph:
        if self.kind == "dimacs-file":
            return load_dimacs(self.path)
        if self.kind == "gnp":
            return gen_gnp(self.n, self.p, self.seed)
        if self.kind == "k-regular":
            return gen_k_regular(self.n, self.k, self.seed)
        return gen_small_world(self.n, self.k, self.p, self.seed)
