"""Running solvers on instances and reporting what they did.

Algorithm tokens follow the ``<FAMILY><style>`` convention: ``MCQ1``,
``MCSa2``, ``BBMC3``; plain ``MC`` has no style.
"""

from __future__ import annotations

import csv
import io
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .bbmc import bbmc_search
from .colour import mcq_search, mcsa_search, mcsb_search
from .graph import Graph, GraphSource
from .ordering import check_style
from .search import UNLIMITED, SearchBudget, SearchOutcome, mc_search

FAMILIES: dict[str, Callable[..., SearchOutcome]] = {
    "MC": mc_search,
    "MCQ": mcq_search,
    "MCSa": mcsa_search,
    "MCSb": mcsb_search,
    "BBMC": bbmc_search,
}

_TOKEN = re.compile(r"^(MC|MCQ|MCSa|MCSb|BBMC)([0-9]*)$")

CSV_COLUMNS = ("instance", "algorithm", "style", "n", "edges", "nodes", "time_ms", "omega", "completed")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class AlgorithmSpec:
    family: str
    style: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError(f"unknown algorithm family {self.family!r}")
        if self.family == "MC":
            if self.style is not None:
                raise UsageError("MC takes no ordering style")
        elif self.style is None:
            raise UsageError(f"{self.family} needs an ordering style 1, 2 or 3")
        else:
            try:
                check_style(self.style)
            except ValueError as exc:
                raise UsageError(str(exc)) from None

    @classmethod
    def parse(cls, token: str) -> AlgorithmSpec:
        m = _TOKEN.match(token.strip())
        if not m:
            raise UsageError(f"unrecognised algorithm {token!r} (try MC, MCQ1, MCSa2, MCSb3, BBMC1)")
        family, digits = m.groups()
        try:
            return cls(family, int(digits) if digits else None)
        except UsageError as exc:
            raise UsageError(f"{token!r}: {exc}") from None

    @property
    def token(self) -> str:
        return self.family if self.style is None else f"{self.family}{self.style}"

    def run(self, g: Graph, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
        solver = FAMILIES[self.family]
        if self.style is None:
            return solver(g, budget)
        return solver(g, self.style, budget)


@dataclass(frozen=True)
class ExperimentRow:
    instance: str
    algorithm: AlgorithmSpec
    n: int
    edges: int
    nodes: int
    elapsed_ms: float
    clique_size: int
    completed: bool
    clique: tuple[int, ...] = ()

    @classmethod
    def from_outcome(cls, instance: str, spec: AlgorithmSpec, g: Graph, out: SearchOutcome) -> ExperimentRow:
        return cls(instance, spec, g.n, g.edge_count, out.nodes, out.elapsed_ms, out.max_size, out.completed, tuple(out.clique))

    def csv_fields(self, timing: bool) -> list:
        return [
            self.instance,
            self.algorithm.token,
            "" if self.algorithm.style is None else self.algorithm.style,
            self.n,
            self.edges,
            self.nodes,
            f"{self.elapsed_ms:.3f}" if timing else "",
            self.clique_size,
            int(self.completed),
        ]


def format_report(row: ExperimentRow) -> str:
    """Deterministic text report for one run; wall-clock time is left out."""
    clique = " ".join(str(v + 1) for v in row.clique)
    return (
        f"instance: {row.instance}\n"
        f"algorithm: {row.algorithm.token}\n"
        f"n: {row.n} edges: {row.edges}\n"
        f"clique: {clique}\n"
        f"size: {row.clique_size}\n"
        f"nodes: {row.nodes}\n"
        f"completed: {str(row.completed).lower()}\n"
    )


def run_single(spec: AlgorithmSpec | str, source: GraphSource, budget: SearchBudget = UNLIMITED) -> ExperimentRow:
    if isinstance(spec, str):
        spec = AlgorithmSpec.parse(spec)
    g = source.load()
    out = spec.run(g, budget)
    return ExperimentRow.from_outcome(source.label, spec, g, out)


# --------------------------------------------------------------------------
# batches over G(n, p)


def p_sweep(p_from: float, p_to: float, p_step: float) -> list[float]:
    if p_step <= 0:
        raise UsageError("p step must be positive")
    count = int(round((p_to - p_from) / p_step)) + 1
    ps = [round(p_from + i * p_step, 10) for i in range(max(count, 0))]
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise UsageError(f"p = {p} is outside [0, 1]")
    return ps


def _run_job(job):
    source, spec, budget = job
    return run_single(spec, source, budget)


def run_batch_random(
    n: int,
    ps: Sequence[float],
    samples: int,
    specs: Iterable[AlgorithmSpec | str],
    seed_base: int = 0,
    budget: SearchBudget = UNLIMITED,
    jobs: int = 1,
) -> list[ExperimentRow]:
    """Run every spec on ``samples`` graphs G(n, p) per ``p``.

    Sample ``s`` uses seed ``seed_base + s``, so the same graph is shared
    by every spec and every ``p`` sweep point. Rows come back ordered by
    ``(p, sample, spec)`` whatever ``jobs`` is.
    """
    specs = [AlgorithmSpec.parse(s) if isinstance(s, str) else s for s in specs]
    work = [
        (GraphSource("gnp", n=n, p=p, seed=seed_base + s), spec, budget)
        for p in ps
        for s in range(samples)
        for spec in specs
    ]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_job, work))
    # generate each graph once for all specs
    rows = []
    cache: dict[GraphSource, Graph] = {}
    for source, spec, b in work:
        g = cache.get(source)
        if g is None:
            cache.clear()
            g = cache[source] = source.load()
        rows.append(ExperimentRow.from_outcome(source.label, spec, g, spec.run(g, b)))
    return rows


def batch_csv(rows: Sequence[ExperimentRow], ps: Sequence[float], n: int, timing: bool = False) -> str:
    """CSV with one line per run, then one ``agg`` line per ``(p, spec)``.

    Aggregate lines carry mean nodes, mean time and mean clique size; their
    ``completed`` field is 1 only if every contributing run completed.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(row.csv_fields(timing))
    groups: dict[tuple[str, str], list[ExperimentRow]] = {}
    for row in rows:
        groups.setdefault((row.instance.rsplit("-", 1)[0], row.algorithm.token), []).append(row)
    for (prefix, token), members in groups.items():
        spec = members[0].algorithm
        k = len(members)
        w.writerow([
            f"agg:{prefix}",
            token,
            "" if spec.style is None else spec.style,
            n,
            f"{sum(r.edges for r in members) / k:.2f}",
            f"{sum(r.nodes for r in members) / k:.2f}",
            f"{sum(r.elapsed_ms for r in members) / k:.3f}" if timing else "",
            f"{sum(r.clique_size for r in members) / k:.2f}",
            int(all(r.completed for r in members)),
        ])
    return buf.getvalue()


# --------------------------------------------------------------------------
# oracle


BRUTE_FORCE_LIMIT = 30


def brute_force_omega(g: Graph) -> int:
    """Clique number by extending every clique one vertex at a time, no bounds.

    Shares nothing with the solvers: it reads the boolean matrix directly
    and uses plain Python sets.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force refused for n = {g.n} > {BRUTE_FORCE_LIMIT}")
    nbrs = [set(j for j in range(g.n) if g.adjacent[i][j]) for i in range(g.n)]
    best = 0

    def extend(size: int, candidates: set[int]) -> None:
        nonlocal best
        best = max(best, size)
        for v in candidates:
            # only extend with higher ids so each clique is built once
            extend(size + 1, {w for w in candidates if w > v and w in nbrs[v]})

    extend(0, set(range(g.n)))
    return best
