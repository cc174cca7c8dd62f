import statistics

import pytest

from qplace.bench import (HEURISTIC, TRIVIAL, BenchConfig, TrialResult, TrialSummary,
                          emit_table, read_table, read_trials_csv, run_bench, run_cell,
                          summarize, trials_csv, write_outputs)
from qplace.circuit import Circuit, cx, emit_circuit, gen_random_circuit, h
from qplace.coupling import line_graph
from qplace.errors import CapacityError
from qplace.placement import SearchConfig


def results(strategy, costs):
    return [TrialResult(i, strategy, c, 0) for i, c in enumerate(costs)]


def test_summarize_textbook_stats():
    s = summarize(results(TRIVIAL, [1, 2, 3]))
    assert (s.t_avg, s.t_med) == (2.0, 2.0)
    assert s.h_avg is None and s.imp is None
    assert summarize(results(TRIVIAL, [1, 2, 3, 4])).t_med == 2.5


def test_summarize_ratio():
    s = summarize(results(TRIVIAL, [7837.76]) + results(HEURISTIC, [7205.67]))
    assert f"{s.imp:.2f}" == "1.09"


def test_summarize_empty():
    with pytest.raises(ValueError):
        summarize([])


def test_single_trivial_trial():
    c = Circuit(4, (cx(0, 2),))
    run = run_cell(c, line_graph(4), trials=1, strategies=(TRIVIAL,))
    assert run.trials == [TrialResult(0, TRIVIAL, 44, 1)]


def test_identical_placements_give_unit_ratio():
    # chain CNOTs already sit on a line under the trivial placement
    c = Circuit(4, (cx(0, 1), cx(1, 2), cx(2, 3), h(0)))
    run = run_cell(c, line_graph(4), trials=20)
    assert run.placements[TRIVIAL] == run.placements[HEURISTIC]
    assert run.summary.t_avg == run.summary.h_avg
    assert f"{run.summary.imp:.2f}" == "1.00"


def test_seeds_shared_across_strategies():
    c = gen_random_circuit(5, 6, 2)
    run = run_cell(c, line_graph(5), trials=7)
    by = {s: [r.seed for r in run.trials if r.strategy == s] for s in (TRIVIAL, HEURISTIC)}
    assert by[TRIVIAL] == by[HEURISTIC] == list(range(7))


def test_capacity():
    with pytest.raises(CapacityError):
        run_cell(Circuit(5, (cx(0, 4),)), line_graph(4), trials=1)


def test_config_validation():
    with pytest.raises(ValueError):
        BenchConfig("c", "a", trials=0)
    with pytest.raises(ValueError):
        BenchConfig("c", "a", strategies=("random",))


def test_run_bench_from_files(tmp_path):
    cpath = tmp_path / "c.txt"
    cpath.write_text(emit_circuit(gen_random_circuit(6, 6, 4)))
    cfg = BenchConfig(str(cpath), "qx5", trials=5, attenuation_enabled=False,
                      search=SearchConfig(max_children=2))
    a, b = run_bench(cfg), run_bench(cfg)
    assert a == b
    assert len(a.trials) == 10


def test_emit_table_csv():
    row = ("qft_n16", "QX3", TrialSummary(7837.76, 7811.0, 7469.7, 7387.0, 7837.76 / 7469.7))
    lines = emit_table([row], "csv").splitlines()
    assert lines[0] == "Circuit,Arch,T.Avg,T.Med,H.Avg,H.Med,Imp"
    assert lines[1] == "qft_n16,QX3,7837.76,7811.00,7469.70,7387.00,1.05"
    assert emit_table([], "csv") == "Circuit,Arch,T.Avg,T.Med,H.Avg,H.Med,Imp\n"


def test_emit_table_markdown_round_trip():
    rows = [("qft", "ladder16", TrialSummary(10.0, 11.0, 12.5, 12.0, 0.8)),
            ("rand0", "qx3", TrialSummary(3.333, 3.0, 1.0, 1.0, 3.333))]
    md = emit_table(rows, "markdown")
    assert md.startswith("| Circuit | Arch |")
    parsed = read_table(md)
    assert parsed == read_table(emit_table(rows, "csv"))
    assert parsed[1] == {"Circuit": "rand0", "Arch": "qx3", "T.Avg": "3.33", "T.Med": "3.00",
                         "H.Avg": "1.00", "H.Med": "1.00", "Imp": "3.33"}


def test_trials_csv_round_trip_and_stats(tmp_path):
    run = run_cell(gen_random_circuit(5, 5, 8), line_graph(5), trials=9)
    trial_path, summary_path = write_outputs(tmp_path, run, "rand", "line5", "csv")
    parsed = read_trials_csv(trial_path.read_text())
    assert parsed == run.trials
    t = [r.cost for r in parsed if r.strategy == TRIVIAL]
    hcost = [r.cost for r in parsed if r.strategy == HEURISTIC]
    row = read_table(summary_path.read_text())[0]
    assert row["T.Avg"] == f"{sum(t) / len(t):.2f}"
    assert row["H.Med"] == f"{statistics.median(hcost):.2f}"
    assert trials_csv(parsed) == trial_path.read_text()


def test_workers_do_not_change_results():
    c = gen_random_circuit(6, 8, 1)
    serial = run_cell(c, line_graph(6), trials=12, workers=1)
    parallel = run_cell(c, line_graph(6), trials=12, workers=3)
    assert serial == parallel
