#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // distance from the ideal value, 0 when exact
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

using PatternProvider = std::function<MeasurementPattern(BlackBoxId)>;

// For each box, the worst branch infidelity between the measurement
// program's corrected output and the circuit-model reference state.
// Taking the provider as a parameter lets fault-injection tests swap in
// corrupted programs.
std::array<double, 8> branch_equivalence_residuals(const PatternProvider& provider);

// Runs the whole cross-check suite. Each check draws its randomness
// from rng_stream(seed, k) with k its position in the suite, so reports
// are reproducible and independent of scheduling.
VerifyReport verify_all(std::uint64_t seed, double tol = pipeline_tol);

// Same, restricted to checks whose name contains the filter substring.
VerifyReport verify_filtered(std::uint64_t seed, const std::string& filter,
                             double tol = pipeline_tol);

std::string to_text(const VerifyReport& report, bool include_timings = false);

}  // namespace mbqc
