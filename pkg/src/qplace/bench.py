"""Trivial-vs-heuristic placement benchmark.

For one (circuit, architecture) cell, each strategy's initial placement is
computed once, then the router runs ``trials`` times with seeds
``0 .. trials-1``. Trial ``k`` uses seed ``k`` for every strategy.
"""

from __future__ import annotations

import csv
import io
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Sequence

from .circuit import Circuit, parse_circuit
from .coupling import CouplingGraph, DistanceMatrix, all_pairs_distances, load_graph
from .errors import CapacityError
from .placement import PartialPlacement, SearchConfig, greedy_place, trivial_placement
from .router import route

TRIVIAL, HEURISTIC = "trivial", "heuristic"
TABLE_COLUMNS = ("Circuit", "Arch", "T.Avg", "T.Med", "H.Avg", "H.Med", "Imp")
TRIAL_COLUMNS = ("seed", "strategy", "cost", "swap_count")


@dataclass(frozen=True)
class BenchConfig:
    circuit_path: str
    arch_path: str
    trials: int = 250
    strategies: tuple[str, ...] = (TRIVIAL, HEURISTIC)
    attenuation_enabled: bool = True
    search: SearchConfig = field(default_factory=SearchConfig)
    output_format: str = "csv"
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        unknown = set(self.strategies) - {TRIVIAL, HEURISTIC}
        if unknown:
            raise ValueError(f"unknown strategies {sorted(unknown)}")
        if self.output_format not in ("csv", "markdown", "md"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class TrialResult:
    seed: int
    strategy: str
    cost: int
    swap_count: int


@dataclass(frozen=True)
class TrialSummary:
    t_avg: Optional[float] = None
    t_med: Optional[float] = None
    h_avg: Optional[float] = None
    h_med: Optional[float] = None
    imp: Optional[float] = None


@dataclass(frozen=True)
class BenchRun:
    trials: list[TrialResult]
    summary: TrialSummary
    placements: dict[str, PartialPlacement]


def _route_seeds(args):
    circuit, placement, graph, dm, strategy, seeds = args
    out = []
    for seed in seeds:
        r = route(circuit, placement, graph, dm, seed)
        out.append(TrialResult(seed, strategy, r.cost, r.swap_count))
    return out


def run_cell(circuit: Circuit, graph: CouplingGraph, trials: int = 250,
             strategies: Sequence[str] = (TRIVIAL, HEURISTIC),
             search: SearchConfig = SearchConfig(), workers: int = 1,
             dm: Optional[DistanceMatrix] = None) -> BenchRun:
    """Benchmark in-memory inputs. ``workers > 1`` fans trials out to processes."""
    if circuit.wire_count > graph.qubit_count:
        raise CapacityError(
            f"{circuit.wire_count} wires do not fit on {graph.qubit_count} qubits")
    dm = dm if dm is not None else all_pairs_distances(graph)
    placements = {}
    for strategy in strategies:
        if strategy == TRIVIAL:
            placements[strategy] = trivial_placement(circuit.wire_count)
        else:
            placements[strategy] = greedy_place(circuit, graph, dm, search)

    seeds = list(range(trials))
    jobs = []
    chunk = max(1, -(-trials // (4 * max(workers, 1))))
    for strategy, pl in placements.items():
        for lo in range(0, trials, chunk):
            jobs.append((circuit, pl, graph, dm, strategy, seeds[lo:lo + chunk]))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_route_seeds, jobs))
    else:
        batches = [_route_seeds(job) for job in jobs]

    order = {s: i for i, s in enumerate(strategies)}
    results = sorted((r for batch in batches for r in batch),
                     key=lambda r: (order[r.strategy], r.seed))
    return BenchRun(results, summarize(results), placements)


def run_bench(cfg: BenchConfig) -> BenchRun:
    circuit = parse_circuit(Path(cfg.circuit_path).read_text(encoding="utf-8"))
    graph = load_graph(cfg.arch_path)
    search = replace(cfg.search, attenuation_enabled=cfg.attenuation_enabled)
    return run_cell(circuit, graph, cfg.trials, cfg.strategies, search, cfg.workers)


def summarize(results: Sequence[TrialResult]) -> TrialSummary:
    if not results:
        raise ValueError("no trial results to summarize")
    by_strategy: dict[str, list[int]] = {}
    for r in results:
        by_strategy.setdefault(r.strategy, []).append(r.cost)
    stats = {}
    for strategy, costs in by_strategy.items():
        stats[strategy] = (statistics.fmean(costs), float(statistics.median(costs)))
    t_avg, t_med = stats.get(TRIVIAL, (None, None))
    h_avg, h_med = stats.get(HEURISTIC, (None, None))
    imp = None
    if t_avg is not None and h_avg:
        imp = t_avg / h_avg
    return TrialSummary(t_avg, t_med, h_avg, h_med, imp)


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.2f}"


def emit_table(rows: Sequence[tuple[str, str, TrialSummary]], fmt: str = "csv") -> str:
    """Render ``(circuit, arch, summary)`` rows as csv or a markdown table."""
    cells = [[name, arch, _fmt(s.t_avg), _fmt(s.t_med), _fmt(s.h_avg), _fmt(s.h_med), _fmt(s.imp)]
             for name, arch, s in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt in ("markdown", "md"):
        lines = ["| " + " | ".join(TABLE_COLUMNS) + " |",
                 "|" + "|".join(["---"] * 2 + ["---:"] * 5) + "|"]
        lines += ["| " + " | ".join(row) + " |" for row in cells]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def read_table(text: str) -> list[dict[str, str]]:
    """Parse output of :func:`emit_table` (either format) back into row dicts."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines and lines[0].startswith("|"):
        split = [[c.strip() for c in ln.strip().strip("|").split("|")] for ln in lines]
        header, body = split[0], [r for r in split[1:] if not set("".join(r)) <= set("-:")]
        return [dict(zip(header, r)) for r in body]
    return list(csv.DictReader(io.StringIO(text)))


def trials_csv(results: Sequence[TrialResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRIAL_COLUMNS)
    for r in results:
        writer.writerow([r.seed, r.strategy, r.cost, r.swap_count])
    return buf.getvalue()


def read_trials_csv(text: str) -> list[TrialResult]:
    return [TrialResult(int(row["seed"]), row["strategy"], int(row["cost"]), int(row["swap_count"]))
            for row in csv.DictReader(io.StringIO(text))]


def write_outputs(out_dir, run: BenchRun, circuit_name: str, arch_name: str,
                  fmt: str = "csv") -> tuple[Path, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    trial_path = out / "trials.csv"
    summary_path = out / ("summary.csv" if fmt == "csv" else "summary.md")
    trial_path.write_text(trials_csv(run.trials), encoding="utf-8")
    summary_path.write_text(emit_table([(circuit_name, arch_name, run.summary)], fmt),
                            encoding="utf-8")
    return trial_path, summary_path
