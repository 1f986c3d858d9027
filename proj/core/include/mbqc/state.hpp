#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mbqc/common.hpp"

namespace mbqc {

using cdouble = std::complex<double>;

// 2x2 unitary, row major. Construction rejects non-unitary matrices, so
// every Gate1Q in flight is safe to apply.
class Gate1Q {
  public:
    Gate1Q(cdouble m00, cdouble m01, cdouble m10, cdouble m11);

    cdouble at(int row, int col) const { return m_[row * 2 + col]; }
    Gate1Q dagger() const;

  private:
    cdouble m_[4];
};

// Matrix product: (a * b) acts as b first, then a.
Gate1Q operator*(const Gate1Q& a, const Gate1Q& b);

namespace gates {
Gate1Q identity();
Gate1Q h();
Gate1Q x();
Gate1Q y();
Gate1Q z();
// R_z(alpha) = diag(e^{-i alpha/2}, e^{+i alpha/2}).
Gate1Q rz(double alpha);
}  // namespace gates

// Computational basis {|0>,|1>} or planar basis B(alpha) with states
// |alpha_pm> = (|0> pm e^{i alpha}|1>)/sqrt(2). Outcome 0 projects onto
// |0> resp. |alpha_+>, outcome 1 onto |1> resp. |alpha_->.
class MeasurementBasis {
  public:
    enum class Kind { computational, planar };

    static MeasurementBasis computational();
    static MeasurementBasis planar(double alpha);  // alpha must be finite

    Kind kind() const { return kind_; }
    double alpha() const;  // planar only

  private:
    MeasurementBasis(Kind k, double a) : kind_(k), alpha_(a) {}
    Kind kind_;
    double alpha_;
};

// Result of a (forced) measurement. The measured qubit is removed from
// the register; index_map[q] is the new index of former qubit q, with -1
// marking the removed one.
struct MeasureResult {
    int outcome = 0;
    double probability = 0.0;
    std::vector<int> index_map;
};

// Dense n-qubit amplitude vector. Qubit 0 is the most significant bit of
// the basis index: a register carrying labels 1..n stores label l at
// index l-1, and |x_1 x_2 ... x_n> sits at the index whose binary
// expansion is x_1 x_2 ... x_n.
class StateVector {
  public:
    // |0...0> on n qubits. n = 0 is the empty register (one amplitude,
    // value 1), reachable by measuring out a whole register.
    explicit StateVector(int num_qubits, int cap = default_qubit_cap);

    // Basis state |index>; rejects num_qubits < 1.
    static StateVector basis_state(int num_qubits, std::uint64_t index,
                                   int cap = default_qubit_cap);

    // Builds a register from raw amplitudes (size must be a power of
    // two) and normalizes; an all-zero vector is rejected.
    static StateVector from_amplitudes(std::vector<cdouble> amplitudes,
                                       int cap = default_qubit_cap);

    int num_qubits() const { return n_; }
    std::uint64_t dim() const { return amp_.size(); }
    cdouble amplitude(std::uint64_t index) const;
    const std::vector<cdouble>& amplitudes() const { return amp_; }
    double norm() const;

    void apply(const Gate1Q& g, int qubit);
    void apply_cz(int a, int b);
    void apply_ccz(int a, int b, int c);

    // Born probability of the given outcome, without collapsing.
    double outcome_probability(int qubit, const MeasurementBasis& basis, int outcome) const;

    // Samples an outcome, collapses, removes the qubit and renormalizes.
    MeasureResult measure(int qubit, const MeasurementBasis& basis, std::mt19937_64& rng);

    // Collapses onto the requested outcome. Throws ImpossibleBranchError
    // when its probability is below impossible_branch_tol.
    MeasureResult force_measure(int qubit, const MeasurementBasis& basis, int outcome);

  private:
    void check_qubit(int qubit) const;
    std::uint64_t mask_of(int qubit) const { return 1ull << (n_ - 1 - qubit); }
    MeasureResult collapse(int qubit, const MeasurementBasis& basis, int outcome, double prob);

    int n_;
    std::vector<cdouble> amp_;
};

cdouble inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|^2

// True iff |<a|b>| >= 1 - tol. Both states are assumed normalized;
// dimension mismatch is an error.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol = pipeline_tol);

}  // namespace mbqc
