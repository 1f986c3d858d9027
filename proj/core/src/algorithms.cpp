#include "mbqc/algorithms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mbqc/graph.hpp"

namespace mbqc {

namespace {

std::string bitstring(std::uint64_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int k = 0; k < n; ++k) {
        if ((x >> (n - 1 - k)) & 1) s[static_cast<std::size_t>(k)] = '1';
    }
    return s;
}

// Distribution over the full register, keyed by bitstring; entries with
// negligible weight are dropped.
std::map<std::string, double> distribution_of(const StateVector& st) {
    std::map<std::string, double> dist;
    for (std::uint64_t x = 0; x < st.dim(); ++x) {
        const double p = std::norm(st.amplitude(x));
        if (p > 1e-15) dist[bitstring(x, st.num_qubits())] = p;
    }
    return dist;
}

std::string sample_bitstring(const StateVector& st, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double acc = 0.0;
    for (std::uint64_t x = 0; x < st.dim(); ++x) {
        acc += std::norm(st.amplitude(x));
        if (u < acc) return bitstring(x, st.num_qubits());
    }
    return bitstring(st.dim() - 1, st.num_qubits());
}

OracleClass verdict_from_all_zeros(double p_zero) {
    if (p_zero > 1.0 - pipeline_tol) return OracleClass::constant;
    if (p_zero < pipeline_tol) return OracleClass::balanced;
    throw std::runtime_error("verdict: all-zeros probability is neither 0 nor 1");
}

// Final query register of the circuit-model interference pipeline.
StateVector dj_query_state(const OracleSpec& oracle, bool refined) {
    const int n = oracle.n;
    if (refined) {
        StateVector st(n);
        for (int q = 0; q < n; ++q) st.apply(gates::h(), q);
        phase_oracle_unitary(oracle)(st);
        for (int q = 0; q < n; ++q) st.apply(gates::h(), q);
        return st;
    }
    StateVector st(n + 1);
    for (int q = 0; q < n; ++q) st.apply(gates::h(), q);
    st.apply(gates::x(), n);
    st.apply(gates::h(), n);
    standard_oracle_unitary(oracle)(st);
    for (int q = 0; q < n; ++q) st.apply(gates::h(), q);
    // The ancilla stays in |->; project it out without disturbing the
    // query register's sign.
    st.force_measure(n, MeasurementBasis::planar(std::numbers::pi), 0);
    return st;
}

DjVerdict verdict_from_state(const StateVector& query, std::mt19937_64& rng) {
    DjVerdict v;
    v.amplitude_all_zeros = query.amplitude(0);
    v.query_register_distribution = distribution_of(query);
    v.verdict = verdict_from_all_zeros(std::norm(query.amplitude(0)));
    v.query_outcome = sample_bitstring(query, rng);
    return v;
}

// Runs the six-qubit program for a box and reduces to the two-qubit
// query register, ordered (first query bit, second query bit).
std::pair<StateVector, MbqcRunRecord> mbqc_query_state(BlackBoxId id, std::mt19937_64& rng) {
    const StateVector resource = six_qubit_resource().first;
    MbqcRunRecord rec = run_pattern(apply_y_encoding(resource), pattern_for_bb(id), rng);
    StateVector st = rec.post_ff_state;
    // Vertex 3 carries the ancilla output in |->; remove it.
    st.force_measure(rec.slot_of_label.at(3), MeasurementBasis::planar(std::numbers::pi), 0);
    // Survivors: vertex 1 in slot 0, vertex 6 in slot 1. The first
    // query bit reads off vertex 6, the second off vertex 1, so swap
    // into reading order.
    std::vector<cdouble> amp(4);
    for (std::uint64_t x1 = 0; x1 < 2; ++x1) {
        for (std::uint64_t x2 = 0; x2 < 2; ++x2) {
            amp[(x1 << 1) | x2] = st.amplitude((x2 << 1) | x1);
        }
    }
    return {StateVector::from_amplitudes(std::move(amp)), std::move(rec)};
}

}  // namespace

DjVerdict run_dj_circuit(const OracleSpec& oracle, bool refined, std::mt19937_64& rng) {
    if (classify(oracle) == OracleClass::neither) {
        throw PromiseViolationError("run_dj_circuit: oracle is neither constant nor balanced");
    }
    return verdict_from_state(dj_query_state(oracle, refined), rng);
}

std::pair<DjVerdict, MbqcRunRecord> run_dj_mbqc(BlackBoxId id, std::mt19937_64& rng) {
    auto [query, rec] = mbqc_query_state(id, rng);
    return {verdict_from_state(query, rng), std::move(rec)};
}

BvResult run_bv_circuit(const std::string& s, bool refined, std::mt19937_64& rng) {
    const OracleSpec oracle = bv_oracle(s);
    const StateVector query = dj_query_state(oracle, refined);
    BvResult r;
    r.recovered_s = sample_bitstring(query, rng);
    std::uint64_t idx = 0;
    for (char c : r.recovered_s) idx = (idx << 1) | static_cast<std::uint64_t>(c - '0');
    r.probability = std::norm(query.amplitude(idx));
    if (s.size() == 2) r.bb = bb_for_bv(s);
    return r;
}

std::pair<BvResult, MbqcRunRecord> run_bv_mbqc(const std::string& s, std::mt19937_64& rng) {
    if (s.size() != 2) {
        throw std::invalid_argument("run_bv_mbqc: the six-qubit resource serves two-bit s");
    }
    const BlackBoxId id = bb_for_bv(s);
    auto [query, rec] = mbqc_query_state(id, rng);
    BvResult r;
    r.recovered_s = sample_bitstring(query, rng);
    std::uint64_t idx = 0;
    for (char c : r.recovered_s) idx = (idx << 1) | static_cast<std::uint64_t>(c - '0');
    r.probability = std::norm(query.amplitude(idx));
    r.bb = id;
    return {std::move(r), std::move(rec)};
}

bool delta_identity_holds(int n) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("delta_identity_holds: n must be in 1..6");
    }
    const std::uint64_t dim = 1ull << n;
    for (std::uint64_t s = 0; s < dim; ++s) {
        for (std::uint64_t t = 0; t < dim; ++t) {
            long long sum = 0;
            for (std::uint64_t x = 0; x < dim; ++x) {
                sum += (std::popcount((s ^ t) & x) & 1) ? -1 : 1;
            }
            const long long expect = s == t ? static_cast<long long>(dim) : 0;
            if (sum != expect) return false;
        }
    }
    return true;
}

std::uint64_t classical_worst_case_queries(int n) {
    if (n < 1 || n > 63) {
        throw std::invalid_argument("classical_worst_case_queries: n must be in 1..63");
    }
    return (1ull << (n - 1)) + 1;
}

AdversaryDemo classical_adversary_demo(int n) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("classical_adversary_demo: n must be in 1..20");
    }
    AdversaryDemo demo;
    const std::uint64_t half = 1ull << (n - 1);
    demo.queries.reserve(half);
    for (std::uint64_t x = 0; x < half; ++x) demo.queries.push_back(x);
    demo.constant_oracle.n = n;
    demo.constant_oracle.table.assign(1ull << n, 0);
    demo.balanced_oracle.n = n;
    demo.balanced_oracle.table.assign(1ull << n, 0);
    for (std::uint64_t x = half; x < (1ull << n); ++x) {
        demo.balanced_oracle.table[x] = 1;
    }
    return demo;
}

}  // namespace mbqc
