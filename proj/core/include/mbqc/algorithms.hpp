#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mbqc/oracle.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/state.hpp"

namespace mbqc {

// Outcome of one Deutsch-Jozsa decision run. The verdict is read off
// the all-zeros probability of the final query register; the sampled
// query_outcome is what a single hardware shot would return.
struct DjVerdict {
    OracleClass verdict = OracleClass::neither;
    std::string query_outcome;
    std::map<std::string, double> query_register_distribution;
    cdouble amplitude_all_zeros{0.0, 0.0};
};

// Outcome of one Bernstein-Vazirani run.
struct BvResult {
    std::string recovered_s;
    double probability = 0.0;
    std::optional<BlackBoxId> bb;
};

// Circuit-model DJ on an arbitrary promise oracle. refined = true uses
// the ancilla-free phase form. Throws PromiseViolationError when the
// oracle is neither constant nor balanced.
DjVerdict run_dj_circuit(const OracleSpec& oracle, bool refined, std::mt19937_64& rng);

// Cluster-state DJ on one of the eight black boxes: encode the ancilla
// wire, run the box's measurement program, project out the ancilla
// output and read the query register.
std::pair<DjVerdict, MbqcRunRecord> run_dj_mbqc(BlackBoxId id, std::mt19937_64& rng);

// Circuit-model BV recovering s from its dot-product oracle in one
// query. bb is set when s has two bits.
BvResult run_bv_circuit(const std::string& s, bool refined, std::mt19937_64& rng);

// Cluster-state BV for two-bit s, dispatched to the matching black box.
std::pair<BvResult, MbqcRunRecord> run_bv_mbqc(const std::string& s, std::mt19937_64& rng);

// Exact interference identity behind the single-query recovery: for
// every s, sum_x (-1)^{s.x + t.x} vanishes unless t = s. Checked in
// integer arithmetic; n is capped at 6 to keep the sums exact and fast.
bool delta_identity_holds(int n);

// Deterministic classical lower bound: 2^{n-1} + 1 queries in the worst
// case.
std::uint64_t classical_worst_case_queries(int n);

// Witness for the lower bound: after answering 0 on half the domain,
// both a constant and a balanced completion remain consistent.
struct AdversaryDemo {
    std::vector<std::uint64_t> queries;
    OracleSpec constant_oracle;
    OracleSpec balanced_oracle;
};

AdversaryDemo classical_adversary_demo(int n);

}  // namespace mbqc
