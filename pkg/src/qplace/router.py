"""Seeded baseline SWAP-insertion router.

The router is intentionally naive: gates are handled strictly in program
order, a non-adjacent CNOT walks its control wire along one randomly chosen
shortest path until it neighbours the target, and nothing is ever undone.
Every SWAP is written out as three CNOTs and four Hadamards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .circuit import CNOT, Circuit, Gate, circuit_cost, swap_gates
from .coupling import CouplingGraph, DistanceMatrix
from .errors import ValidationError
from .placement import PartialPlacement
from .rng import SplitMix64

PATH_CAP = 32
SWAP_LEN = 7
UNOCCUPIED = None


class Layout:
    """Mutable wire <-> hardware-qubit correspondence, kept mutually inverse."""

    __slots__ = ("wire_to_qubit", "qubit_to_wire")

    def __init__(self, placement: PartialPlacement, qubit_count: int):
        if not placement.is_complete:
            raise ValidationError("routing needs a fully placed initial layout")
        placement.check_fits(len(placement), qubit_count)
        self.wire_to_qubit = list(placement.slots)
        self.qubit_to_wire = [UNOCCUPIED] * qubit_count
        for w, q in enumerate(self.wire_to_qubit):
            self.qubit_to_wire[q] = w

    def swap(self, p: int, q: int) -> None:
        wp, wq = self.qubit_to_wire[p], self.qubit_to_wire[q]
        self.qubit_to_wire[p], self.qubit_to_wire[q] = wq, wp
        if wp is not UNOCCUPIED:
            self.wire_to_qubit[wp] = q
        if wq is not UNOCCUPIED:
            self.wire_to_qubit[wq] = p

    def placement(self) -> PartialPlacement:
        return PartialPlacement(tuple(self.wire_to_qubit))

    def __eq__(self, other):
        return (isinstance(other, Layout)
                and self.wire_to_qubit == other.wire_to_qubit
                and self.qubit_to_wire == other.qubit_to_wire)

    def __repr__(self):
        return f"Layout({self.wire_to_qubit})"


@dataclass(frozen=True)
class RoutedResult:
    circuit: Circuit
    swap_count: int
    cost: int
    final_layout: Layout
    # index of the first gate of each emitted SWAP block
    swap_starts: tuple[int, ...] = ()


def shortest_paths(g: CouplingGraph, dm: DistanceMatrix, u: int, v: int,
                   cap: int = PATH_CAP) -> list[list[int]]:
    """Up to ``cap`` shortest u-v paths, in lexicographic order of vertices."""
    rows = dm.rows
    paths = []
    path = [u]

    def walk(node):
        if len(paths) >= cap:
            return
        if node == v:
            paths.append(list(path))
            return
        remaining = rows[node][v]
        for nb in g.neighbors[node]:
            if rows[nb][v] == remaining - 1:
                path.append(nb)
                walk(nb)
                path.pop()

    walk(u)
    return paths


def route(c: Circuit, initial: PartialPlacement, g: CouplingGraph,
          dm: DistanceMatrix, seed: int) -> RoutedResult:
    if len(initial) != c.wire_count:
        raise ValidationError("placement length differs from circuit width")
    layout = Layout(initial, g.qubit_count)
    rng = SplitMix64(seed)
    rows = dm.rows
    out: list[Gate] = []
    starts = []
    for gate in c.gates:
        if gate.kind != CNOT:
            out.append(Gate(gate.kind, (layout.wire_to_qubit[gate.qubits[0]],), gate.angle))
            continue
        ctl, tgt = gate.qubits
        qc, qt = layout.wire_to_qubit[ctl], layout.wire_to_qubit[tgt]
        if rows[qc][qt] > 1:
            paths = shortest_paths(g, dm, qc, qt)
            path = paths[rng.below(len(paths))]
            for p, q in zip(path[:-2], path[1:-1]):
                starts.append(len(out))
                out.extend(swap_gates(p, q))
                layout.swap(p, q)
            qc = layout.wire_to_qubit[ctl]
        out.append(Gate(CNOT, (qc, qt)))
    routed = Circuit(g.qubit_count, tuple(out))
    return RoutedResult(routed, len(starts), circuit_cost(routed), layout, tuple(starts))


def _is_swap_block(gates, k) -> Optional[tuple[int, int]]:
    block = gates[k:k + SWAP_LEN]
    if len(block) != SWAP_LEN or block[0].kind != CNOT:
        return None
    a, b = block[0].qubits
    if list(block) != swap_gates(a, b):
        return None
    return a, b


def replay(result: RoutedResult, initial: PartialPlacement, graph: Optional[CouplingGraph] = None):
    """Translate a routed circuit back to logical events.

    Yields ``("swap", p, q)``, ``("cx", ctl_wire, tgt_wire, swaps_before)`` and
    ``(kind, wire, angle)`` for single-qubit gates. Raises ValueError when a
    claimed SWAP block is malformed, a gate lands on an unoccupied qubit, or
    (given ``graph``) a CNOT acts on uncoupled qubits.
    """
    gates = result.circuit.gates
    layout = Layout(initial, result.circuit.wire_count)
    # without recorded positions, any 7-gate SWAP pattern is taken as a SWAP
    starts = set(result.swap_starts) if result.swap_starts or not result.swap_count else None
    k = 0
    pending = 0
    while k < len(gates):
        if starts is None and _is_swap_block(gates, k) or starts is not None and k in starts:
            pair = _is_swap_block(gates, k)
            if pair is None:
                raise ValueError(f"no SWAP block at gate {k}")
            if graph is not None and not graph.are_adjacent(*pair):
                raise ValueError(f"SWAP on uncoupled qubits {pair}")
            layout.swap(*pair)
            pending += 1
            yield ("swap",) + pair
            k += SWAP_LEN
            continue
        gate = gates[k]
        wires = [layout.qubit_to_wire[q] for q in gate.qubits]
        if UNOCCUPIED in wires:
            raise ValueError(f"gate {k} acts on an unoccupied qubit")
        if gate.kind == CNOT:
            if graph is not None and not graph.are_adjacent(*gate.qubits):
                raise ValueError(f"CNOT on uncoupled qubits {gate.qubits}")
            yield (CNOT, wires[0], wires[1], pending)
            pending = 0
        else:
            yield (gate.kind, wires[0], gate.angle)
        k += 1


def _logical_events(c: Circuit):
    for gate in c.gates:
        if gate.kind == CNOT:
            yield (CNOT, gate.qubits[0], gate.qubits[1])
        else:
            yield (gate.kind, gate.qubits[0], gate.angle)


def verify_semantics(original: Circuit, result: RoutedResult, initial: PartialPlacement,
                     graph: Optional[CouplingGraph] = None) -> bool:
    """True iff undoing the SWAPs recovers the original logical gate sequence."""
    try:
        events = []
        for ev in replay(result, initial, graph):
            if ev[0] == "swap":
                continue
            events.append(ev[:3])
    except (ValueError, IndexError):
        return False
    return events == list(_logical_events(original))
