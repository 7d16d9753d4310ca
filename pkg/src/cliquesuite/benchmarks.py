"""Benchmark families that can be built exactly from their definition.

The Hamming and Johnson DIMACS instances are defined by a distance rule on
binary words, so they can be regenerated. Vertex numbering matters because
every ordering breaks ties on index: Hamming words are numbered by their
integer value and Johnson words (fixed-weight subsets) by the integer value
of their bit pattern, which puts subsets in colex order.

Everything else in the DIMACS set (brock, keller, MANN, p-hat, san, ...)
comes from randomised or unpublished generators and has to be read from
the original ``.clq`` files; see :func:`find_instance`.
"""

from __future__ import annotations

import os
import re
from itertools import combinations
from pathlib import Path

import numpy as np

from .graph import Graph, load_dimacs

INSTANCE_DIR_ENV = "CLIQUESUITE_DIMACS_DIR"


def hamming(bits: int, distance: int) -> Graph:
    """Words of length ``bits``, adjacent iff their Hamming distance is at least ``distance``."""
    words = np.arange(1 << bits, dtype=np.int64)
    xor = words[:, None] ^ words[None, :]
    dist = np.zeros_like(xor)
    for b in range(bits):
        dist += (xor >> b) & 1
    return Graph.from_matrix(dist >= distance, name=f"hamming{bits}-{distance}")


def johnson(n: int, weight: int, distance: int) -> Graph:
    """Weight-``weight`` words of length ``n``, adjacent iff Hamming distance >= ``distance``."""
    subsets = sorted(combinations(range(n), weight), key=lambda s: s[::-1])
    m = np.zeros((len(subsets), n), dtype=np.int64)
    for i, s in enumerate(subsets):
        m[i, list(s)] = 1
    overlap = m @ m.T
    a = 2 * (weight - overlap) >= distance
    np.fill_diagonal(a, False)
    return Graph.from_matrix(a, name=f"johnson{n}-{weight}-{distance}")


_FAMILIES = {
    re.compile(r"^hamming(\d+)-(\d+)$"): lambda m: hamming(int(m[1]), int(m[2])),
    re.compile(r"^johnson(\d+)-(\d+)-(\d+)$"): lambda m: johnson(int(m[1]), int(m[2]), int(m[3])),
}


def constructible(name: str) -> bool:
    return any(p.match(name) for p in _FAMILIES)


def construct(name: str) -> Graph:
    for pattern, build in _FAMILIES.items():
        m = pattern.match(name)
        if m:
            return build(m)
    raise KeyError(f"{name} has no known construction")


def _spellings(name: str) -> list[str]:
    # DIMACS files circulate as both brock200_1 and brock200-1
    alt = {name, name.replace("-", "_"), name.replace("_", "-")}
    return sorted(alt)


def instance_dirs(extra=()) -> list[Path]:
    dirs = [Path(d) for d in extra]
    env = os.environ.get(INSTANCE_DIR_ENV)
    if env:
        dirs.extend(Path(p) for p in env.split(os.pathsep) if p)
    return dirs


def find_instance(name: str, search=()) -> Path | None:
    """Locate ``<name>.clq`` in ``search`` dirs and ``$CLIQUESUITE_DIMACS_DIR``."""
    for d in instance_dirs(search):
        for spelling in _spellings(name):
            p = d / f"{spelling}.clq"
            if p.is_file():
                return p
    return None


def load_instance(name: str, search=()) -> Graph:
    """A named DIMACS instance, from disk if present, else by construction."""
    path = find_instance(name, search)
    if path is not None:
        return load_dimacs(path)
    if constructible(name):
        return construct(name)
    raise FileNotFoundError(
        f"{name}.clq not found; put the DIMACS file in a directory listed in ${INSTANCE_DIR_ENV}"
    )
