"""
Tracking estimated SWAPs with the offset register
=================================================

Each CNOT's distance is read from the Floyd-Warshall table and corrected by
per-qubit offsets left behind by earlier CNOTs. The hook passed to
``evaluate_cost`` exposes every step.
"""

from qplace import PartialPlacement, SearchConfig, all_pairs_distances, evaluate_cost
from qplace.circuit import Circuit, cx
from qplace.coupling import line_graph

graph = line_graph(6)
dm = all_pairs_distances(graph)
print(dm.dist)

circuit = Circuit(4, (cx(0, 3), cx(0, 3), cx(1, 2), cx(0, 2)))
placement = PartialPlacement((0, 2, 3, 5))


def show(cnot, swaps, before, after):
    i, c, t = cnot
    print(f"cnot {i}: wires ({c},{t}) -> qubits ({placement[c]},{placement[t]}) "
          f"est. swaps {swaps}  offsets {before} -> {after}")


for attenuate in (True, False):
    print(f"\nattenuation {'on' if attenuate else 'off'}")
    cb = evaluate_cost(circuit, placement, dm, SearchConfig(attenuation_enabled=attenuate),
                       on_step=show)
    print(cb)
