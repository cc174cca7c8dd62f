"""Approximate SWAP-cost model and greedy initial-placement search.

A placement maps circuit wires to hardware qubits. Wires that are not yet
placed hold ``UNPLACED``; CNOTs touching such wires are dropped from the
cost, as if the wire and its gates were deleted from the circuit.

Distances are estimated per CNOT from the Floyd-Warshall table, corrected by
an offset register that tracks how far earlier (estimated) SWAPs have moved
each hardware qubit. The offset register is reset for every evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .circuit import Circuit, cnot_list
from .coupling import CouplingGraph, DistanceMatrix
from .errors import CapacityError, ParseError, ValidationError

UNPLACED = None
SENTINEL_MAX = math.inf

OffsetRegister = list  # list[int], one entry per hardware qubit


@dataclass(frozen=True)
class PartialPlacement:
    """``slots[w]`` is the hardware qubit of wire ``w``, or ``UNPLACED``."""

    slots: tuple[Optional[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))
        placed = [q for q in self.slots if q is not UNPLACED]
        if any(q < 0 for q in placed):
            raise ValidationError("negative hardware qubit in placement")
        if len(set(placed)) != len(placed):
            raise ValidationError(f"placement is not injective: {self.slots}")

    def __len__(self):
        return len(self.slots)

    def __getitem__(self, wire):
        return self.slots[wire]

    @property
    def is_complete(self) -> bool:
        return UNPLACED not in self.slots

    def extend(self, wire: int, qubit: int) -> "PartialPlacement":
        slots = list(self.slots)
        slots[wire] = qubit
        return PartialPlacement(tuple(slots))

    def check_fits(self, wire_count: int, qubit_count: int) -> None:
        if len(self.slots) != wire_count:
            raise ValidationError(
                f"placement has {len(self.slots)} entries for {wire_count} wires")
        if wire_count > qubit_count:
            raise CapacityError(f"{wire_count} wires do not fit on {qubit_count} qubits")
        for q in self.slots:
            if q is not UNPLACED and q >= qubit_count:
                raise ValidationError(f"hardware qubit {q} out of range")


def trivial_placement(wires: int) -> PartialPlacement:
    return PartialPlacement(tuple(range(wires)))


def parse_placement(text: str) -> PartialPlacement:
    """Comma-separated hardware indices, one per wire; ``-`` leaves a wire unplaced."""
    body = text.strip()
    if not body:
        raise ParseError("empty placement")
    slots = []
    for tok in body.split(","):
        tok = tok.strip()
        if tok == "-":
            slots.append(UNPLACED)
            continue
        try:
            slots.append(int(tok))
        except ValueError:
            raise ParseError(f"bad placement entry {tok!r}") from None
    return PartialPlacement(tuple(slots))


def format_placement(pl: PartialPlacement) -> str:
    return ",".join("-" if q is UNPLACED else str(q) for q in pl.slots)


@dataclass(frozen=True)
class CostBreakdown:
    err: float
    active_cnots: int
    cost: float


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for :func:`greedy_place`.

    ``max_children`` caps how many equally-cheapest wires are expanded under
    one node. ``cutoff_depth`` collapses the frontier to its single best node
    every that many levels. ``beam_width`` caps the frontier size; ``None``
    lets the tree grow without bound.
    """

    max_children: int = 4
    cutoff_depth: Optional[int] = None
    attenuation_enabled: bool = True
    beam_width: Optional[int] = 64

    def __post_init__(self):
        if self.max_children < 1:
            raise ValueError("max_children must be >= 1")
        if self.cutoff_depth is not None and self.cutoff_depth < 1:
            raise ValueError("cutoff_depth must be >= 1")
        if self.beam_width is not None and self.beam_width < 1:
            raise ValueError("beam_width must be >= 1")


def nr_active(c: Circuit, pl: PartialPlacement) -> int:
    """Number of CNOTs whose control and target are both placed."""
    return sum(1 for _, a, b in cnot_list(c)
               if pl[a] is not UNPLACED and pl[b] is not UNPLACED)


def attenuation(i: int, c: Circuit) -> float:
    total = len(cnot_list(c))
    if not 0 <= i < total:
        raise IndexError(f"CNOT index {i} out of range for {total} CNOTs")
    return (total - i) / total


def dist_estimate(cnot, pl: PartialPlacement, dm: DistanceMatrix, off: OffsetRegister) -> int:
    """Estimated SWAPs for one CNOT; updates ``off`` in place.

    The offset-corrected distance is ``d = max(1, D[Qc][Qt] + off[Qc] + off[Qt])``.
    Both qubits move ``m = d // 2`` times; for ``m > 0`` the lower-indexed
    qubit's offset grows by ``m - 1`` and the higher one's shrinks by ``m``.
    """
    _, ctl, tgt = cnot
    qc, qt = pl[ctl], pl[tgt]
    if qc is UNPLACED or qt is UNPLACED:
        raise ValueError(f"CNOT {cnot} has an unplaced wire")
    return _estimate(qc, qt, dm.rows, off)


def _estimate(qc: int, qt: int, rows, off) -> int:
    d = rows[qc][qt] + off[qc] + off[qt]
    if d < 1:
        d = 1
    m = d // 2
    if m > 0:
        lo, hi = (qc, qt) if qc < qt else (qt, qc)
        off[lo] += m - 1
        off[hi] -= m
    return d - 1


StepHook = Callable[[tuple, int, Sequence[int], Sequence[int]], None]


def evaluate_cost(c: Circuit, pl: PartialPlacement, dm: DistanceMatrix,
                  cfg: SearchConfig = SearchConfig(),
                  on_step: Optional[StepHook] = None) -> CostBreakdown:
    """Attenuation-weighted estimated SWAPs per active CNOT.

    ``on_step(cnot, swaps, offsets_before, offsets_after)`` is called for every
    active CNOT when given; it exists for instrumentation only.
    """
    cnots = cnot_list(c)
    total = len(cnots)
    off = [0] * len(dm)
    rows = dm.rows
    err = 0.0
    active = 0
    for cn in cnots:
        i, a, b = cn
        qa, qb = pl[a], pl[b]
        if qa is UNPLACED or qb is UNPLACED:
            continue
        active += 1
        before = list(off) if on_step else None
        swaps = _estimate(qa, qb, rows, off)
        if on_step:
            on_step(cn, swaps, before, list(off))
        weight = (total - i) / total if cfg.attenuation_enabled else 1.0
        err += weight * swaps
    if active == 0:
        return CostBreakdown(0.0, 0, SENTINEL_MAX)
    return CostBreakdown(err, active, err / active)


class _Scorer:
    """evaluate_cost with the CNOT list and weights hoisted out of the search loop."""

    def __init__(self, c: Circuit, dm: DistanceMatrix, attenuate: bool):
        cnots = cnot_list(c)
        total = len(cnots)
        self.terms = [(a, b, (total - i) / total if attenuate else 1.0)
                      for i, a, b in cnots]
        self.rows = dm.rows
        self.n = len(dm)

    def __call__(self, slots) -> float:
        off = [0] * self.n
        rows = self.rows
        err = 0.0
        active = 0
        for a, b, w in self.terms:
            qa = slots[a]
            qb = slots[b]
            if qa is None or qb is None:
                continue
            active += 1
            err += w * _estimate(qa, qb, rows, off)
        return err / active if active else SENTINEL_MAX


def _same(x: float, y: float) -> bool:
    return x == y or math.isclose(x, y, rel_tol=1e-12, abs_tol=1e-12)


def greedy_place(c: Circuit, g: CouplingGraph, dm: DistanceMatrix,
                 cfg: SearchConfig = SearchConfig()) -> PartialPlacement:
    """Place one wire per hardware qubit, visiting qubits in index order.

    Under every node, each unplaced wire is tried on the next qubit and
    scored with :func:`evaluate_cost`. Only the wires tied for the cheapest
    score become children, at most ``max_children`` of them, lowest wire
    index first. The cheapest leaf reached is returned; ties go to the leaf
    discovered first.
    """
    wires = c.wire_count
    if wires > g.qubit_count:
        raise CapacityError(f"{wires} wires do not fit on {g.qubit_count} qubits")
    score = _Scorer(c, dm, cfg.attenuation_enabled)

    frontier = [((UNPLACED,) * wires, SENTINEL_MAX)]
    for qubit in range(wires):
        children = []
        for slots, _ in frontier:
            scored = []
            for wire in range(wires):
                if slots[wire] is UNPLACED:
                    child = slots[:wire] + (qubit,) + slots[wire + 1:]
                    scored.append((score(child), child))
            best = min(s for s, _ in scored)
            ties = [(child, s) for s, child in scored if _same(s, best)]
            children.extend(ties[:cfg.max_children])
        level = qubit + 1
        if cfg.cutoff_depth is not None and level % cfg.cutoff_depth == 0:
            children = [_cheapest(children)]
        elif cfg.beam_width is not None and len(children) > cfg.beam_width:
            children = sorted(children, key=lambda node: node[1])[:cfg.beam_width]
        frontier = children
    return PartialPlacement(_cheapest(frontier)[0])


def _cheapest(nodes):
    best = nodes[0]
    for node in nodes[1:]:
        if node[1] < best[1] and not _same(node[1], best[1]):
            best = node
    return best
