#include "mbqc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace mbqc {

std::string to_string(OracleClass c) {
    switch (c) {
        case OracleClass::constant: return "constant";
        case OracleClass::balanced: return "balanced";
        case OracleClass::neither: return "neither";
    }
    throw std::logic_error("to_string: bad OracleClass");
}

void OracleSpec::validate() const {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("OracleSpec: n must be in 1..20");
    }
    if (table.size() != (1ull << n)) {
        throw std::invalid_argument("OracleSpec: table size must be 2^n");
    }
    for (int v : table) {
        if (v != 0 && v != 1) {
            throw std::invalid_argument("OracleSpec: table entries must be 0 or 1");
        }
    }
}

OracleClass classify(const OracleSpec& o) {
    o.validate();
    std::size_t ones = 0;
    for (int v : o.table) ones += static_cast<std::size_t>(v);
    if (ones == 0 || ones == o.table.size()) return OracleClass::constant;
    if (2 * ones == o.table.size()) return OracleClass::balanced;
    return OracleClass::neither;
}

std::string to_string(BlackBoxId id) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    return names[static_cast<int>(id)];
}

BlackBoxId black_box_from_string(const std::string& name) {
    for (BlackBoxId id : all_black_boxes()) {
        if (to_string(id) == name) return id;
    }
    throw std::invalid_argument("black_box_from_string: unknown box '" + name + "'");
}

std::array<BlackBoxId, 8> all_black_boxes() {
    return {BlackBoxId::i,  BlackBoxId::ii, BlackBoxId::iii, BlackBoxId::iv,
            BlackBoxId::v,  BlackBoxId::vi, BlackBoxId::vii, BlackBoxId::viii};
}

OracleSpec bb_truth_table(BlackBoxId id) {
    // Tables over (x1, x2) = 00, 01, 10, 11.
    static const std::array<std::array<int, 4>, 8> tables = {{
        {0, 0, 0, 0},  // i: f = 0
        {1, 1, 1, 1},  // ii: f = 1
        {0, 0, 1, 1},  // iii: f = x1
        {1, 1, 0, 0},  // iv: f = not x1
        {0, 1, 0, 1},  // v: f = x2
        {1, 0, 1, 0},  // vi: f = not x2
        {0, 1, 1, 0},  // vii: f = x1 xor x2
        {1, 0, 0, 1},  // viii: f = not (x1 xor x2)
    }};
    const auto& t = tables[static_cast<std::size_t>(id)];
    return OracleSpec{2, {t[0], t[1], t[2], t[3]}};
}

OracleSpec bv_oracle(const std::string& s) {
    if (s.empty() || s.size() > 20) {
        throw std::invalid_argument("bv_oracle: s must have 1..20 bits");
    }
    std::uint64_t mask = 0;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bv_oracle: s must be a binary string");
        }
        mask = (mask << 1) | static_cast<std::uint64_t>(c - '0');
    }
    const int n = static_cast<int>(s.size());
    OracleSpec o;
    o.n = n;
    o.table.resize(1ull << n);
    for (std::uint64_t x = 0; x < o.table.size(); ++x) {
        o.table[x] = std::popcount(x & mask) & 1;
    }
    return o;
}

BlackBoxId bb_for_bv(const std::string& s) {
    if (s == "00") return BlackBoxId::i;
    if (s == "01") return BlackBoxId::v;
    if (s == "10") return BlackBoxId::iii;
    if (s == "11") return BlackBoxId::vii;
    throw std::invalid_argument("bb_for_bv: s must be one of 00, 01, 10, 11");
}

void StandardOracle::operator()(StateVector& st) const {
    if (st.num_qubits() != spec.n + 1) {
        throw std::invalid_argument("StandardOracle: register must have n+1 qubits");
    }
    // Swap the target-qubit pair of amplitudes wherever f(x) = 1; the
    // target is the least significant bit.
    std::vector<cdouble> amp(st.amplitudes());
    for (std::uint64_t x = 0; x < spec.table.size(); ++x) {
        if (spec.table[x]) std::swap(amp[(x << 1) | 0], amp[(x << 1) | 1]);
    }
    st = StateVector::from_amplitudes(std::move(amp));
}

void PhaseOracle::operator()(StateVector& st) const {
    if (st.num_qubits() != spec.n) {
        throw std::invalid_argument("PhaseOracle: register must have n qubits");
    }
    std::vector<cdouble> amp(st.amplitudes());
    for (std::uint64_t x = 0; x < amp.size(); ++x) {
        if (spec.table[x]) amp[x] = -amp[x];
    }
    st = StateVector::from_amplitudes(std::move(amp));
}

StandardOracle standard_oracle_unitary(const OracleSpec& o) {
    o.validate();
    return StandardOracle{o};
}

PhaseOracle phase_oracle_unitary(const OracleSpec& o) {
    o.validate();
    return PhaseOracle{o};
}

void OracleCircuit::apply(StateVector& st) const {
    if (st.num_qubits() != num_qubits) {
        throw std::invalid_argument("OracleCircuit: register size mismatch");
    }
    for (const CircuitGate& g : gates) {
        if (g.axis == CircuitGate::Axis::x) {
            switch (g.controls.size()) {
                case 0: st.apply(gates::x(), g.target); break;
                case 1: {
                    // CNOT = (I x H) CZ (I x H) on (control, target).
                    st.apply(gates::h(), g.target);
                    st.apply_cz(g.controls[0], g.target);
                    st.apply(gates::h(), g.target);
                    break;
                }
                case 2: {
                    st.apply(gates::h(), g.target);
                    st.apply_ccz(g.controls[0], g.controls[1], g.target);
                    st.apply(gates::h(), g.target);
                    break;
                }
                default:
                    throw std::invalid_argument("OracleCircuit: at most two controls");
            }
        } else {
            switch (g.controls.size()) {
                case 0: st.apply(gates::z(), g.target); break;
                case 1: st.apply_cz(g.controls[0], g.target); break;
                case 2: st.apply_ccz(g.controls[0], g.controls[1], g.target); break;
                default:
                    throw std::invalid_argument("OracleCircuit: at most two controls");
            }
        }
    }
}

OracleSpec OracleCircuit::induced_table() const {
    if (num_qubits < 2) {
        throw std::invalid_argument("induced_table: need query wires plus a target");
    }
    const int n = num_qubits - 1;
    OracleSpec o;
    o.n = n;
    o.table.resize(1ull << n);
    for (std::uint64_t x = 0; x < o.table.size(); ++x) {
        StateVector st = StateVector::basis_state(num_qubits, x << 1);
        apply(st);
        int hit = -1;
        for (std::uint64_t i = 0; i < st.dim(); ++i) {
            if (std::abs(st.amplitude(i) - cdouble(1.0, 0.0)) <= algebraic_tol) {
                hit = static_cast<int>(i);
            } else if (std::abs(st.amplitude(i)) > algebraic_tol) {
                throw std::runtime_error("induced_table: circuit is not a bit oracle");
            }
        }
        if (hit < 0 || (static_cast<std::uint64_t>(hit) >> 1) != x) {
            throw std::runtime_error("induced_table: circuit does not preserve the query");
        }
        o.table[x] = hit & 1;
    }
    return o;
}

std::vector<int> OracleCircuit::induced_phase_signs() const {
    std::vector<int> signs;
    signs.reserve(1ull << num_qubits);
    for (std::uint64_t x = 0; x < (1ull << num_qubits); ++x) {
        StateVector st = StateVector::basis_state(num_qubits, x);
        apply(st);
        const cdouble a = st.amplitude(x);
        if (std::abs(a - cdouble(1.0, 0.0)) <= algebraic_tol) {
            signs.push_back(1);
        } else if (std::abs(a + cdouble(1.0, 0.0)) <= algebraic_tol) {
            signs.push_back(-1);
        } else {
            throw std::runtime_error("induced_phase_signs: circuit is not diagonal +-1");
        }
    }
    return signs;
}

OracleCircuit circuit_for_bb(BlackBoxId id) {
    using Axis = CircuitGate::Axis;
    const CircuitGate flip{Axis::x, {}, 2};
    const CircuitGate cnot1{Axis::x, {0}, 2};
    const CircuitGate cnot2{Axis::x, {1}, 2};
    OracleCircuit c;
    c.num_qubits = 3;
    switch (id) {
        case BlackBoxId::i: break;
        case BlackBoxId::ii: c.gates = {flip}; break;
        case BlackBoxId::iii: c.gates = {cnot1}; break;
        case BlackBoxId::iv: c.gates = {cnot1, flip}; break;
        case BlackBoxId::v: c.gates = {cnot2}; break;
        case BlackBoxId::vi: c.gates = {cnot2, flip}; break;
        case BlackBoxId::vii: c.gates = {cnot1, cnot2}; break;
        case BlackBoxId::viii: c.gates = {cnot1, cnot2, flip}; break;
    }
    return c;
}

OracleCircuit dj3_example_circuit() {
    OracleCircuit c;
    c.num_qubits = 4;
    c.gates = {CircuitGate{CircuitGate::Axis::x, {1, 2}, 3},
               CircuitGate{CircuitGate::Axis::x, {0}, 3}};
    return c;
}

OracleCircuit dj3_refined_example_circuit() {
    OracleCircuit c;
    c.num_qubits = 3;
    c.gates = {CircuitGate{CircuitGate::Axis::z, {1}, 2},
               CircuitGate{CircuitGate::Axis::z, {}, 0}};
    return c;
}

std::string to_text(const OracleSpec& o) {
    o.validate();
    std::ostringstream out;
    out << "oracle " << o.n << "\ntable";
    for (int v : o.table) out << " " << v;
    out << "\n";
    return out.str();
}

OracleSpec oracle_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "oracle") {
        throw std::invalid_argument("oracle_from_text: expected leading 'oracle <n>'");
    }
    OracleSpec o;
    if (!(in >> o.n)) {
        throw std::invalid_argument("oracle_from_text: missing bit count");
    }
    if (!(in >> tok) || tok != "table") {
        throw std::invalid_argument("oracle_from_text: expected 'table' line");
    }
    int v = 0;
    while (in >> v) o.table.push_back(v);
    if (!in.eof()) {
        throw std::invalid_argument("oracle_from_text: malformed table entry");
    }
    o.validate();
    return o;
}

}  // namespace mbqc
