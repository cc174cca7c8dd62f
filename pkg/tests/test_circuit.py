import math

import pytest
from hypothesis import given, settings, strategies as st

from qplace.circuit import (CNOT, Circuit, Gate, circuit_cost, cnot_list, cx, emit_circuit,
                            gen_qft, gen_random_circuit, h, parse_circuit, rz, swap_gates, u, x)
from qplace.errors import ParseError, ValidationError


def test_parse_single_cnot():
    assert parse_circuit("qubits 2\ncx 0 1") == Circuit(2, (cx(0, 1),))


def test_parse_rz():
    c = parse_circuit("qubits 1\nrz 0 1.5708")
    assert c.gates == (rz(0, 1.5708),)


def test_duplicate_cnot_operands():
    with pytest.raises(ParseError, match="duplicate"):
        parse_circuit("qubits 2\ncx 0 0")


@pytest.mark.parametrize("text, line", [
    ("qubits 2\ncx 0 2", 2),
    ("qubits 2\nh 0\nccx 0 1", 3),
    ("qubits 2\nrz 0", 2),
    ("qubits 2\nrz 0 abc", 2),
    ("qubits 2\nh 0 1", 2),
    ("cx 0 1", 1),
])
def test_gate_list_errors_report_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_circuit(text)
    assert info.value.line == line


def test_comments_and_blank_lines():
    c = parse_circuit("# fixture\nqubits 3\n\nh 2  # hadamard\nx 1\nu 0\n")
    assert c.gates == (h(2), x(1), u(0))


def test_qasm_subset():
    text = """OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
h q[0];
cx q[0], q[2];
rz(pi/4) q[1]; x q[2];
"""
    c = parse_circuit(text)
    assert c.wire_count == 3
    assert c.gates == (h(0), cx(0, 2), rz(1, math.pi / 4), x(2))


@pytest.mark.parametrize("stmt", [
    "measure q[0] -> c[0];", "barrier q[0];", "u3(0,0,0) q[0];", "creg c[2];",
    "cx q[0];", "h r[0];", "rz q[0];", "rz(foo) q[0];",
])
def test_qasm_rejects_unsupported(stmt):
    with pytest.raises(ParseError):
        parse_circuit("OPENQASM 2.0;\nqreg q[2];\n" + stmt)


def test_qasm_second_qreg_rejected():
    with pytest.raises(ParseError, match="single qreg"):
        parse_circuit("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];")


def test_gate_invariants():
    with pytest.raises(ValidationError):
        Gate(CNOT, (0,))
    with pytest.raises(ValidationError):
        Gate("rz", (0,))
    with pytest.raises(ValidationError):
        Gate("h", (0,), 0.1)
    with pytest.raises(ValidationError):
        Circuit(2, (cx(0, 2),))


def test_cnot_list():
    assert cnot_list(Circuit(3, (h(0), cx(0, 1), cx(1, 2)))) == [(0, 0, 1), (1, 1, 2)]
    assert cnot_list(Circuit(2, (h(0), x(1)))) == []
    assert cnot_list(Circuit(3, (cx(0, 2), x(1), cx(0, 1)))) == [(0, 0, 2), (1, 0, 1)]


def test_circuit_cost_examples():
    assert circuit_cost(Circuit(2, (cx(0, 1),))) == 10
    assert circuit_cost(Circuit(2, (cx(0, 1), h(0), rz(1, 0.3)))) == 11
    assert circuit_cost(Circuit(2, tuple(swap_gates(0, 1)))) == 34


def test_swap_decomposition_shape():
    gates = swap_gates(3, 5)
    assert [g.kind for g in gates].count("cx") == 3
    assert [g.kind for g in gates].count("h") == 4


def test_random_circuit_determinism():
    assert gen_random_circuit(16, 16, 0) == gen_random_circuit(16, 16, 0)
    assert emit_circuit(gen_random_circuit(16, 16, 0)) != emit_circuit(gen_random_circuit(16, 16, 1))


def test_random_circuit_two_wires():
    c = gen_random_circuit(2, 1, 7)
    assert c.wire_count == 2
    assert {q for g in c.gates for q in g.qubits} <= {0, 1}
    assert len(c.gates) >= 1


def test_random_circuit_layers_touch_every_wire():
    c = gen_random_circuit(5, 3, 11)
    touched = sum(len(g.qubits) for g in c.gates)
    assert touched == 5 * 3


def test_qft_counts():
    assert gen_qft(1).gates == (h(0),)
    assert len(cnot_list(gen_qft(2))) == 2
    c = gen_qft(16)
    assert len(cnot_list(c)) == 240
    assert sum(g.kind == "h" for g in c.gates) == 16
    assert sum(g.kind == "rz" for g in c.gates) == 3 * 120


def test_qft_interaction_pattern_is_all_pairs():
    pairs = {frozenset((a, b)) for _, a, b in cnot_list(gen_qft(6))}
    assert len(pairs) == 15


def test_emit_examples():
    assert emit_circuit(Circuit(2, (cx(0, 1),))) == "qubits 2\ncx 0 1\n"
    assert emit_circuit(Circuit(3)) == "qubits 3\n"


def test_emit_round_trip_fixed():
    c = gen_random_circuit(16, 16, 3)
    assert parse_circuit(emit_circuit(c)) == c


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(1, 10), st.integers(0, 2**64 - 1))
def test_emit_round_trip(wires, depth, seed):
    c = gen_random_circuit(wires, depth, seed)
    assert parse_circuit(emit_circuit(c)) == c


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(1, 6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_cost_additive(wires, depth, s1, s2):
    a = gen_random_circuit(wires, depth, s1)
    b = gen_random_circuit(wires, depth, s2)
    assert circuit_cost(a + b) == circuit_cost(a) + circuit_cost(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(1, 6), st.integers(0, 10**6))
def test_cnot_indices_contiguous(wires, depth, seed):
    idx = [i for i, _, _ in cnot_list(gen_random_circuit(wires, depth, seed))]
    assert idx == list(range(len(idx)))
