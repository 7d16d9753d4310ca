"""Exact maximum clique solvers: MC, MCQ, MCSa, MCSb and BBMC."""

from .bbmc import BitNeighbourhoods, bb_colour, bbmc_search, build_bit_neighbourhoods
from .colour import (
    ColourClasses,
    ColourResult,
    get_single_conflict_vertex,
    mcq_search,
    mcsa_search,
    mcsb_search,
    number_sort,
    repair,
)
from .graph import (
    DimacsFormatError,
    GenerationError,
    Graph,
    GraphSource,
    gen_gnp,
    gen_k_regular,
    gen_small_world,
    load_dimacs,
    parse_dimacs,
    write_dimacs,
)
from .harness import AlgorithmSpec, ExperimentRow, brute_force_omega, run_batch_random, run_single
from .ordering import VertexRecord, min_width_order, order_by_style
from .search import SearchBudget, SearchOutcome, mc_search

__version__ = "0.1.0"
