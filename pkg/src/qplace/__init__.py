"""Initial qubit placement by an approximate SWAP-cost model, plus a seeded
baseline router and a trivial-vs-heuristic benchmark harness."""

from .bench import (BenchConfig, TrialResult, TrialSummary, emit_table, run_bench,
                    run_cell, summarize)
from .circuit import (Circuit, Gate, circuit_cost, cnot_list, emit_circuit, gen_qft,
                      gen_random_circuit, parse_circuit)
from .coupling import (CouplingGraph, DistanceMatrix, all_pairs_distances, load_graph,
                       parse_graph, shortest_path)
from .errors import CapacityError, ParseError, QplaceError, ValidationError
from .placement import (SENTINEL_MAX, UNPLACED, CostBreakdown, PartialPlacement,
                        SearchConfig, attenuation, dist_estimate, evaluate_cost,
                        greedy_place, nr_active, trivial_placement)
from .router import Layout, RoutedResult, route, verify_semantics
from .rng import SplitMix64

__version__ = "0.1.0"
