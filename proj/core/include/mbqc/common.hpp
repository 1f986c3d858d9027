#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace mbqc {

// Tolerance for algebraic identities (unitarity, norm preservation,
// operator equalities on small registers).
inline constexpr double algebraic_tol = 1e-12;

// Tolerance for end-to-end pipelines (branch equivalence, verdicts,
// accumulated measurement chains).
inline constexpr double pipeline_tol = 1e-10;

// Forced branches whose Born probability falls below this are rejected
// as impossible rather than renormalized into garbage.
inline constexpr double impossible_branch_tol = 1e-14;

// Largest register the dense simulator accepts (2^24 amplitudes).
inline constexpr int default_qubit_cap = 24;

// Thrown when a forced measurement outcome or forced fusion branch has
// (near-)zero probability.
struct ImpossibleBranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a DJ driver receives an oracle that is neither constant
// nor balanced. The algorithm is defined only under that promise.
struct PromiseViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Deterministic RNG splitting rule: worker k under master seed m uses
// mt19937_64 seeded with m + k. Parallel sections hand out consecutive
// worker indices so runs are reproducible regardless of scheduling.
inline std::mt19937_64 rng_stream(std::uint64_t master_seed, std::uint64_t worker_index = 0) {
    return std::mt19937_64(master_seed + worker_index);
}

}  // namespace mbqc
