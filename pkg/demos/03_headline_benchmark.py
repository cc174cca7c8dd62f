"""
Trivial vs heuristic placement at desk scale
============================================

Routes a 16-wire QFT and two 16x16 random circuits 250 times (seeds 0..249)
on the ladder, QX3 and QX5 couplings, with and without attenuation, and
writes Table-shaped summaries to ``results/headline.md``.

The router here is the package's own seeded baseline, not the compiler used
in the original experiments, so the numbers are not expected to match them.
Run from the repository root: ``python demos/03_headline_benchmark.py``.
"""

import time
from pathlib import Path

from qplace import SearchConfig, all_pairs_distances, emit_table, load_graph, run_cell
from qplace.circuit import gen_qft, gen_random_circuit

TRIALS = 250
circuits = [("qft_n16", gen_qft(16)),
            ("rand0_n16_d16", gen_random_circuit(16, 16, 0)),
            ("rand1_n16_d16", gen_random_circuit(16, 16, 1))]
archs = [load_graph(name) for name in ("ladder16", "qx3", "qx5")]

sections = []
start = time.perf_counter()
for attenuate in (True, False):
    rows = []
    for name, circuit in circuits:
        for graph in archs:
            run = run_cell(circuit, graph, TRIALS, search=SearchConfig(attenuation_enabled=attenuate),
                           dm=all_pairs_distances(graph))
            rows.append((name, graph.name, run.summary))
    title = f"## Attenuation {'on' if attenuate else 'off'} ({TRIALS} trials per cell)"
    sections.append(title + "\n\n" + emit_table(rows, "markdown"))
    print(sections[-1])

out = Path("results")
out.mkdir(exist_ok=True)
(out / "headline.md").write_text("\n".join(sections), encoding="utf-8")
print(f"wrote {out / 'headline.md'} in {time.perf_counter() - start:.1f}s")
