"""
Why the initial placement matters
=================================

A four-wire circuit on a four-qubit line. Under the identity placement the
CNOT between wires 0 and 2 needs a SWAP; the greedy search finds a placement
where every CNOT already sits on a coupled pair.
"""

from qplace import (Circuit, PartialPlacement, all_pairs_distances, evaluate_cost,
                    greedy_place, nr_active, route, trivial_placement)
from qplace.circuit import cx, emit_circuit
from qplace.coupling import line_graph

graph = line_graph(4)
dm = all_pairs_distances(graph)
circuit = Circuit(4, (cx(0, 1), cx(0, 2), cx(2, 3)))
print(emit_circuit(circuit))

# Partial placements keep only the CNOTs whose wires are both placed.
for slots in [(0, 1, None, None), (0, 1, 2, None), (0, 1, 2, 3)]:
    pl = PartialPlacement(slots)
    print(slots, "active CNOTs:", nr_active(circuit, pl),
          "estimated cost:", evaluate_cost(circuit, pl, dm).cost)

# The identity placement forces the router to insert a SWAP.
trivial = route(circuit, trivial_placement(4), graph, dm, seed=0)
print("\ntrivial  :", trivial_placement(4).slots, "swaps", trivial.swap_count, "cost", trivial.cost)

# The search places one wire per hardware qubit, Q0 first.
placed = greedy_place(circuit, graph, dm)
result = route(circuit, placed, graph, dm, seed=0)
print("heuristic:", placed.slots, "swaps", result.swap_count, "cost", result.cost)
