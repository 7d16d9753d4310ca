"""Command line: ``solve``, ``gen`` and ``batch``.

Reports on stdout are deterministic; wall-clock time goes to stderr for
``solve`` and into the CSV only when ``--timing`` is given for ``batch``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import benchmarks
from .graph import DimacsFormatError, GenerationError, GraphSource, gen_gnp, gen_k_regular, gen_small_world, write_dimacs
from .harness import AlgorithmSpec, ExperimentRow, UsageError, batch_csv, format_report, p_sweep, run_batch_random
from .search import SearchBudget

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


def _solve(args) -> int:
    spec = AlgorithmSpec.parse(args.algorithm)
    budget = SearchBudget.seconds(args.time_limit)
    path = Path(args.instance)
    if path.is_file():
        g = GraphSource("dimacs-file", path=str(path)).load()
        label = path.stem
    elif benchmarks.constructible(args.instance):
        g = benchmarks.construct(args.instance)
        label = args.instance
    else:
        raise FileNotFoundError(f"cannot read {args.instance}")
    out = spec.run(g, budget)
    row = ExperimentRow.from_outcome(label, spec, g, out)
    sys.stdout.write(format_report(row))
    print(f"time_ms: {out.elapsed_ms:.3f}", file=sys.stderr)
    return EXIT_OK if out.completed else EXIT_TIMEOUT


_GEN_USAGE = {
    "gnp": "gen gnp <n> <p> <seed>",
    "kregular": "gen kregular <n> <k> <seed>",
    "smallworld": "gen smallworld <n> <k> <p> <seed>",
}


def _gen(args) -> int:
    kind, params = args.kind, args.params
    try:
        if kind == "gnp" and len(params) == 3:
            g = gen_gnp(int(params[0]), float(params[1]), int(params[2]))
        elif kind == "kregular" and len(params) == 3:
            g = gen_k_regular(int(params[0]), int(params[1]), int(params[2]))
        elif kind == "smallworld" and len(params) == 4:
            g = gen_small_world(int(params[0]), int(params[1]), float(params[2]), int(params[3]))
        else:
            raise UsageError("usage: " + _GEN_USAGE.get(kind, " | ".join(_GEN_USAGE.values())))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(write_dimacs(g, comments=[f"{kind} {' '.join(params)}"]))
    return EXIT_OK


def _batch(args) -> int:
    specs = [AlgorithmSpec.parse(t) for t in args.algorithms.split(",") if t.strip()]
    if not specs:
        raise UsageError("no algorithms given")
    if args.n < 1 or args.samples < 0:
        raise UsageError("need n >= 1 and samples >= 0")
    ps = p_sweep(args.p_from, args.p_to, args.p_step)
    budget = SearchBudget.seconds(args.time_limit)
    rows = run_batch_random(args.n, ps, args.samples, specs, args.seed, budget, jobs=args.jobs)
    text = batch_csv(rows, ps, args.n, timing=args.timing)
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquesuite", description="Exact maximum clique solvers.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a maximum clique")
    p.add_argument("algorithm", help="MC, MCQ1-3, MCSa1-3, MCSb1-3 or BBMC1-3")
    p.add_argument("instance", help="DIMACS .clq file, or a constructible name such as hamming6-4")
    p.add_argument("time_limit", nargs="?", type=float, default=None, help="seconds; omit for no limit")
    p.set_defaults(func=_solve)

    p = sub.add_parser("gen", help="write a random instance in DIMACS format")
    p.add_argument("kind", choices=sorted(_GEN_USAGE))
    p.add_argument("params", nargs="+")
    p.set_defaults(func=_gen)

    p = sub.add_parser("batch", help="run algorithms over a G(n, p) sweep, CSV out")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-from", type=float, required=True)
    p.add_argument("--p-to", type=float, default=None)
    p.add_argument("--p-step", type=float, default=0.1)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--algorithms", default="MCSa1,BBMC1", help="comma separated tokens")
    p.add_argument("--seed", type=int, default=0, help="seed of sample 0")
    p.add_argument("--time-limit", type=float, default=None, help="seconds per run")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="fill the time_ms column")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "p_to", 0) is None:
        args.p_to = args.p_from
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cliquesuite: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, DimacsFormatError, GenerationError) as exc:
        print(f"cliquesuite: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
