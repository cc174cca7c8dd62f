"""Undirected coupling graphs and Floyd-Warshall all-pairs distances.

Graph files are line oriented::

    # comment
    qubits 4
    edge 0 1
    edge 1 2

Edge direction is discarded, so ``edge 1 0`` and ``edge 0 1`` are the same
coupling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError

BUILTIN_ARCHITECTURES = ("qx3", "qx5", "ladder16")


@dataclass(frozen=True)
class CouplingGraph:
    qubit_count: int
    edges: frozenset[tuple[int, int]]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.qubit_count < 1:
            raise ValidationError("qubit_count must be positive")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValidationError(f"self-loop on qubit {u}")
            if not (0 <= u < self.qubit_count and 0 <= v < self.qubit_count):
                raise ValidationError(
                    f"edge ({u}, {v}) out of range for {self.qubit_count} qubits")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))
        if not self._connected():
            raise ValidationError("coupling graph is disconnected")

    @classmethod
    def from_edges(cls, qubit_count: int, edges, name: str = "") -> "CouplingGraph":
        return cls(qubit_count, frozenset((int(u), int(v)) for u, v in edges), name)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted adjacency lists, indexed by qubit."""
        adj = [[] for _ in range(self.qubit_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def are_adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def _connected(self) -> bool:
        adj = [[] for _ in range(self.qubit_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.qubit_count


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Hop-count distances plus a next-hop table for path reconstruction.

    ``next_hop[u, v]`` is the vertex after ``u`` on one shortest path to ``v``.
    """

    dist: np.ndarray
    next_hop: np.ndarray

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        # plain-int view; numpy scalar indexing is slow in the scoring loops
        return tuple(tuple(int(x) for x in row) for row in self.dist)

    def __len__(self):
        return self.dist.shape[0]


def parse_graph(text: str, name: str = "") -> CouplingGraph:
    """Parse graph-file text into a validated :class:`CouplingGraph`."""
    qubit_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens[1:]]
        except ValueError:
            raise ParseError(f"expected integers in {raw.strip()!r}", lineno) from None
        if qubit_count is None:
            if tokens[0] != "qubits" or len(values) != 1:
                raise ParseError("first line must be 'qubits N'", lineno)
            qubit_count = values[0]
            if qubit_count < 1:
                raise ParseError("qubit count must be positive", lineno)
        elif tokens[0] == "edge" and len(values) == 2:
            edges.append((values[0], values[1]))
        else:
            raise ParseError(f"expected 'edge U V', got {raw.strip()!r}", lineno)
    if qubit_count is None:
        raise ParseError("missing 'qubits N' header")
    return CouplingGraph.from_edges(qubit_count, edges, name)


def load_graph(source) -> CouplingGraph:
    """Load a coupling graph from a path, or from one of the bundled names."""
    if isinstance(source, str) and source in BUILTIN_ARCHITECTURES:
        text = resources.files("qplace.data").joinpath(f"{source}.txt").read_text("utf-8")
        return parse_graph(text, name=source)
    path = Path(source)
    return parse_graph(path.read_text(encoding="utf-8"), name=path.stem)


def line_graph(n: int) -> CouplingGraph:
    return CouplingGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"line{n}")


def ring_graph(n: int) -> CouplingGraph:
    return CouplingGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"ring{n}")


def star_graph(n: int) -> CouplingGraph:
    return CouplingGraph.from_edges(n, [(0, i) for i in range(1, n)], f"star{n}")


def ladder_graph(rungs: int) -> CouplingGraph:
    """Two rails of ``rungs`` qubits; qubit ``i`` faces qubit ``i + rungs``."""
    edges = [(i, i + rungs) for i in range(rungs)]
    for i in range(rungs - 1):
        edges += [(i, i + 1), (i + rungs, i + rungs + 1)]
    return CouplingGraph.from_edges(2 * rungs, edges, f"ladder{2 * rungs}")


def all_pairs_distances(g: CouplingGraph) -> DistanceMatrix:
    """Floyd-Warshall over unit edge weights.

    Relaxation is strict, so among equal-length routes the one through the
    lowest intermediate index found first is kept in ``next_hop``.
    """
    n = g.qubit_count
    big = n + 1  # longer than any simple path
    dist = np.full((n, n), big, dtype=np.int64)
    nxt = np.full((n, n), -1, dtype=np.int64)
    idx = np.arange(n)
    dist[idx, idx] = 0
    nxt[idx, idx] = idx
    for u, v in g.edges:
        dist[u, v] = dist[v, u] = 1
        nxt[u, v] = v
        nxt[v, u] = u
    for k in range(n):
        via = dist[:, k, None] + dist[None, k, :]
        better = via < dist
        dist = np.where(better, via, dist)
        nxt = np.where(better, nxt[:, k, None], nxt)
    dist.flags.writeable = False
    nxt.flags.writeable = False
    return DistanceMatrix(dist, nxt)


def shortest_path(dm: DistanceMatrix, u: int, v: int) -> list[int]:
    path = [u]
    while u != v:
        u = int(dm.next_hop[u, v])
        path.append(u)
    return path
