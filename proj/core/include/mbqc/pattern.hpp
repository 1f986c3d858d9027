#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/oracle.hpp"
#include "mbqc/state.hpp"

namespace mbqc {

// Affine mod-2 combination of recorded outcomes: constant + sum of
// s_label over labels. eval throws when an outcome it needs is missing.
struct OutcomeExponent {
    int constant = 0;
    std::vector<int> labels;

    int eval(const std::map<int, int>& outcomes) const;
};

// One factor of a conditional output correction. Pauli and Hadamard
// factors are raised to the exponent's parity; a rotation factor is
// applied whenever the parity is odd (all programs use the constant
// parity 1 there).
struct FeedForwardTerm {
    enum class Kind { hadamard, sigma_x, sigma_z, rz };
    Kind kind = Kind::hadamard;
    double angle = 0.0;  // rz only
    OutcomeExponent exponent;
};

// Product of terms in written order: the rightmost term acts on the
// state first. notation is the display form.
struct FeedForwardSpec {
    std::vector<FeedForwardTerm> terms;
    std::string notation;
};

// Collapses the correction product at concrete outcomes into a single
// 2x2 unitary.
Gate1Q eval_feedforward(const FeedForwardSpec& spec, const std::map<int, int>& outcomes);

struct MeasureStep {
    int label = 0;
    MeasurementBasis basis = MeasurementBasis::computational();
};

// A measurement program: ordered single-qubit measurements on labeled
// vertices, then outcome-conditioned corrections on the surviving ones.
struct MeasurementPattern {
    std::optional<BlackBoxId> box;
    std::vector<MeasureStep> steps;
    std::map<int, FeedForwardSpec> feedforward;
};

// The six-qubit program for a black box: measure vertex 2, then 4, then
// 5, and correct vertices 1, 3, 6.
MeasurementPattern pattern_for_bb(BlackBoxId id);

// Full trace of one pattern run. Labels of measured vertices disappear
// from slot_of_label; the survivors map to their compacted register
// slots.
struct MbqcRunRecord {
    std::optional<BlackBoxId> bb;
    std::map<int, int> outcomes;
    double probability = 1.0;
    StateVector pre_ff_state{0};
    StateVector post_ff_state{0};
    std::map<int, int> slot_of_label;
};

MbqcRunRecord run_pattern(const StateVector& resource, const MeasurementPattern& pattern,
                          std::mt19937_64& rng);

// Forces the outcome sequence (one entry per step, in step order).
// Throws ImpossibleBranchError on a branch of (near-)zero probability.
MbqcRunRecord run_pattern_forced(const StateVector& resource, const MeasurementPattern& pattern,
                                 const std::vector<int>& outcomes);

// Runs every branch of up to 16 steps, skipping impossible ones, and
// checks that the surviving probabilities sum to 1.
std::vector<MbqcRunRecord> enumerate_branches(const StateVector& resource,
                                              const MeasurementPattern& pattern);

std::string to_text(const MeasurementPattern& pattern);

}  // namespace mbqc
