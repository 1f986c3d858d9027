#pragma once

#include <array>
#include <string>
#include <vector>

#include "mbqc/state.hpp"

namespace mbqc {

enum class OracleClass { constant, balanced, neither };

std::string to_string(OracleClass c);

// Boolean function f: {0,1}^n -> {0,1} as a truth table. table[x] is
// f(x) with x read as an n-bit integer, first input bit most
// significant.
struct OracleSpec {
    int n = 0;
    std::vector<int> table;

    void validate() const;  // 1 <= n <= 20, table size 2^n, entries 0/1
};

OracleClass classify(const OracleSpec& o);

// The eight two-bit boolean functions used as black boxes, in their
// conventional order: i and ii are the constants, iii..viii the
// balanced ones.
enum class BlackBoxId { i, ii, iii, iv, v, vi, vii, viii };

std::string to_string(BlackBoxId id);
BlackBoxId black_box_from_string(const std::string& name);
std::array<BlackBoxId, 8> all_black_boxes();

OracleSpec bb_truth_table(BlackBoxId id);

// f(x) = s . x mod 2 for an n-bit string s ("10" means s_1 = 1, s_2 = 0).
OracleSpec bv_oracle(const std::string& s);

// The black box realizing the two-bit dot-product oracle for s.
BlackBoxId bb_for_bv(const std::string& s);

// |x>|y> -> |x>|y xor f(x)> on n+1 qubits, query register first, target
// qubit last.
struct StandardOracle {
    OracleSpec spec;
    void operator()(StateVector& st) const;
};

// |x> -> (-1)^{f(x)} |x> on n qubits.
struct PhaseOracle {
    OracleSpec spec;
    void operator()(StateVector& st) const;
};

StandardOracle standard_oracle_unitary(const OracleSpec& o);
PhaseOracle phase_oracle_unitary(const OracleSpec& o);

// One multi-controlled gate of an oracle circuit. Axis x flips the
// target where all controls are 1 (X, CNOT, Toffoli for 0, 1, 2
// controls); axis z negates the amplitude where controls and target are
// all 1 (Z, CZ, CCZ).
struct CircuitGate {
    enum class Axis { x, z };
    Axis axis = Axis::x;
    std::vector<int> controls;
    int target = 0;
};

struct OracleCircuit {
    int num_qubits = 0;
    std::vector<CircuitGate> gates;

    void apply(StateVector& st) const;

    // Truth table realized on |x>|0> -> |x>|f(x)>, treating the last
    // qubit as the target. Throws if the circuit is not of that form.
    OracleSpec induced_table() const;

    // Signs of the diagonal when the circuit is diagonal in the
    // computational basis. Throws otherwise.
    std::vector<int> induced_phase_signs() const;
};

// Gate realization of each black box on wires (x1, x2, y) = (0, 1, 2).
OracleCircuit circuit_for_bb(BlackBoxId id);

// Three-input example f(x1, x2, x3) = x1 xor (x2 and x3): its standard
// form on four wires (Toffoli then CNOT) and its phase form on three
// wires (CZ then Z).
OracleCircuit dj3_example_circuit();
OracleCircuit dj3_refined_example_circuit();

std::string to_text(const OracleSpec& o);
OracleSpec oracle_from_text(const std::string& text);

}  // namespace mbqc
