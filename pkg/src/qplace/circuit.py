"""Circuit representation, text formats, fixture generators and gate costs.

Two input formats are read. The native gate list::

    qubits 3
    h 0
    cx 0 1
    rz 2 0.785

and a small OpenQASM 2 subset (``qreg``, ``cx``, ``h``, ``x``, ``rz``),
recognised by a leading ``OPENQASM`` token.
"""

from __future__ import annotations

import ast
import math
import operator
import re
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .rng import SplitMix64

CNOT, H, X, RZ, U = "cx", "h", "x", "rz", "u"
SINGLE_QUBIT_KINDS = frozenset({H, X, RZ, U})
GATE_KINDS = SINGLE_QUBIT_KINDS | {CNOT}

CNOT_COST = 10
SINGLE_QUBIT_COST = 1
RZ_COST = 0


@dataclass(frozen=True)
class Gate:
    """One gate. ``U`` is an opaque single-qubit gate that only carries cost."""

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValidationError(f"unknown gate kind {self.kind!r}")
        arity = 2 if self.kind == CNOT else 1
        if len(self.qubits) != arity:
            raise ValidationError(f"{self.kind} takes {arity} operand(s), got {len(self.qubits)}")
        if self.kind == CNOT and self.qubits[0] == self.qubits[1]:
            raise ValidationError(f"cx with duplicate operands {self.qubits}")
        if (self.kind == RZ) != (self.angle is not None):
            raise ValidationError("an angle is required for rz and only for rz")


def cx(c: int, t: int) -> Gate:
    return Gate(CNOT, (c, t))


def h(q: int) -> Gate:
    return Gate(H, (q,))


def x(q: int) -> Gate:
    return Gate(X, (q,))


def rz(q: int, angle: float) -> Gate:
    return Gate(RZ, (q,), float(angle))


def u(q: int) -> Gate:
    return Gate(U, (q,))


def swap_gates(a: int, b: int) -> list[Gate]:
    """SWAP as three CNOTs, the middle one reversed by four Hadamards."""
    return [cx(a, b), h(a), h(b), cx(a, b), h(a), h(b), cx(a, b)]


@dataclass(frozen=True)
class Circuit:
    wire_count: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        if self.wire_count < 1:
            raise ValidationError("wire_count must be positive")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in g.qubits:
                if not 0 <= q < self.wire_count:
                    raise ValidationError(
                        f"operand {q} out of range for {self.wire_count} wires")

    def __add__(self, other: "Circuit") -> "Circuit":
        return Circuit(max(self.wire_count, other.wire_count), self.gates + other.gates)

    def __len__(self):
        return len(self.gates)


def cnot_list(c: Circuit) -> list[tuple[int, int, int]]:
    """``(i, control, target)`` for every CNOT, ``i`` counting CNOTs only."""
    pairs = [g.qubits for g in c.gates if g.kind == CNOT]
    return [(i, ctl, tgt) for i, (ctl, tgt) in enumerate(pairs)]


def gate_cost(g: Gate) -> int:
    if g.kind == CNOT:
        return CNOT_COST
    if g.kind == RZ:
        return RZ_COST
    return SINGLE_QUBIT_COST


def circuit_cost(c: Circuit) -> int:
    return sum(gate_cost(g) for g in c.gates)


# --- text formats -----------------------------------------------------------

def parse_circuit(text: str) -> Circuit:
    """Parse gate-list or QASM-subset text; the format is picked from the first token."""
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].split("//", 1)[0].strip()
        if stripped:
            if stripped.split()[0].startswith("OPENQASM"):
                return _parse_qasm(text)
            break
    return _parse_gate_list(text)


def _parse_gate_list(text: str) -> Circuit:
    wire_count = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, *args = line.split()
        if wire_count is None:
            if op != "qubits" or len(args) != 1:
                raise ParseError("first line must be 'qubits N'", lineno)
            wire_count = _int(args[0], lineno)
            if wire_count < 1:
                raise ParseError("qubit count must be positive", lineno)
            continue
        if op == CNOT and len(args) == 2:
            g = (op, (_int(args[0], lineno), _int(args[1], lineno)), None)
        elif op in (H, X, U) and len(args) == 1:
            g = (op, (_int(args[0], lineno),), None)
        elif op == RZ and len(args) == 2:
            try:
                angle = float(args[1])
            except ValueError:
                raise ParseError(f"bad angle {args[1]!r}", lineno) from None
            g = (op, (_int(args[0], lineno),), angle)
        elif op in GATE_KINDS:
            raise ParseError(f"wrong operand count for {op}", lineno)
        else:
            raise ParseError(f"unknown gate {op!r}", lineno)
        gates.append(_gate(g, wire_count, lineno))
    if wire_count is None:
        raise ParseError("missing 'qubits N' header")
    return Circuit(wire_count, tuple(gates))


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _gate(spec, wire_count, lineno) -> Gate:
    kind, qubits, angle = spec
    for q in qubits:
        if not 0 <= q < wire_count:
            raise ParseError(f"operand {q} out of range for {wire_count} wires", lineno)
    try:
        return Gate(kind, qubits, angle)
    except ValidationError as exc:
        raise ParseError(str(exc), lineno) from None


_QREG = re.compile(r"qreg\s+(\w+)\s*\[\s*(\d+)\s*\]$")
_OPERAND = re.compile(r"(\w+)\s*\[\s*(\d+)\s*\]$")
_GATE = re.compile(r"(cx|h|x|rz)\s*(?:\(([^)]*)\))?\s+(.+)$")


def _parse_qasm(text: str) -> Circuit:
    reg = None
    wire_count = None
    gates = []
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        code = raw.split("//", 1)[0]
        for stmt in code.split(";"):
            stmt = stmt.strip()
            if not stmt or stmt.startswith("OPENQASM") or stmt.startswith("include"):
                continue
            m = _QREG.match(stmt)
            if m:
                if reg is not None:
                    raise ParseError("only a single qreg is supported", lineno)
                reg, wire_count = m.group(1), int(m.group(2))
                if wire_count < 1:
                    raise ParseError("empty qreg", lineno)
                continue
            m = _GATE.match(stmt)
            if not m:
                raise ParseError(f"unsupported statement {stmt!r}", lineno)
            if reg is None:
                raise ParseError("gate before qreg declaration", lineno)
            kind, params, operands = m.groups()
            qubits = []
            for opnd in operands.split(","):
                om = _OPERAND.match(opnd.strip())
                if not om or om.group(1) != reg:
                    raise ParseError(f"bad operand {opnd.strip()!r}", lineno)
                qubits.append(int(om.group(2)))
            angle = None
            if kind == RZ:
                if params is None:
                    raise ParseError("rz needs an angle", lineno)
                angle = _eval_angle(params, lineno)
            elif params is not None:
                raise ParseError(f"{kind} takes no parameters", lineno)
            expected = 2 if kind == CNOT else 1
            if len(qubits) != expected:
                raise ParseError(f"wrong operand count for {kind}", lineno)
            gates.append(_gate((kind, tuple(qubits), angle), wire_count, lineno))
    if reg is None:
        raise ParseError("no qreg declared")
    return Circuit(wire_count, tuple(gates))


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub,
           ast.Mult: operator.mul, ast.Div: operator.truediv, ast.Pow: operator.pow}


def _eval_angle(expr: str, lineno: int) -> float:
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(expr)

    try:
        return ev(ast.parse(expr.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise ParseError(f"bad angle expression {expr!r}", lineno) from None


def emit_circuit(c: Circuit) -> str:
    """Gate-list text; ``parse_circuit`` inverts it exactly (angles via ``repr``)."""
    out = [f"qubits {c.wire_count}"]
    for g in c.gates:
        if g.kind == RZ:
            out.append(f"rz {g.qubits[0]} {g.angle!r}")
        else:
            out.append(" ".join([g.kind, *map(str, g.qubits)]))
    return "\n".join(out) + "\n"


# --- generators -------------------------------------------------------------

def gen_random_circuit(wires: int, depth: int, seed: int) -> Circuit:
    """``depth`` layers; each layer shuffles the wires and walks them, either
    pairing the next two into a CNOT or giving one a random h/x/rz."""
    if wires < 2:
        raise ValueError("random circuits need at least two wires")
    rng = SplitMix64(seed)
    gates = []
    for _ in range(depth):
        order = list(range(wires))
        rng.shuffle(order)
        k = 0
        while k < wires:
            if k + 1 < wires and rng.below(2) == 0:
                gates.append(cx(order[k], order[k + 1]))
                k += 2
                continue
            kind = rng.below(3)
            if kind == 0:
                gates.append(h(order[k]))
            elif kind == 1:
                gates.append(x(order[k]))
            else:
                gates.append(rz(order[k], 2 * math.pi * rng.random()))
            k += 1
    return Circuit(wires, tuple(gates))


def controlled_phase(a: int, b: int, angle: float) -> list[Gate]:
    return [rz(a, angle / 2), cx(a, b), rz(b, -angle / 2), cx(a, b), rz(b, angle / 2)]


def gen_qft(wires: int) -> Circuit:
    """Textbook QFT without the final reversal of wire order."""
    if wires < 1:
        raise ValueError("wires must be positive")
    gates = []
    for j in range(wires):
        gates.append(h(j))
        for k in range(j + 1, wires):
            gates += controlled_phase(k, j, math.pi / 2 ** (k - j))
    return Circuit(wires, tuple(gates))
