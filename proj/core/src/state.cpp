#include "mbqc/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mbqc {

namespace {

bool close(cdouble a, cdouble b) { return std::abs(a - b) <= algebraic_tol; }

}  // namespace

Gate1Q::Gate1Q(cdouble m00, cdouble m01, cdouble m10, cdouble m11) : m_{m00, m01, m10, m11} {
    const cdouble c00 = std::conj(m00) * m00 + std::conj(m10) * m10;
    const cdouble c01 = std::conj(m00) * m01 + std::conj(m10) * m11;
    const cdouble c10 = std::conj(m01) * m00 + std::conj(m11) * m10;
    const cdouble c11 = std::conj(m01) * m01 + std::conj(m11) * m11;
    if (!close(c00, cdouble(1.0, 0.0)) || !close(c01, cdouble(0.0, 0.0)) ||
        !close(c10, cdouble(0.0, 0.0)) || !close(c11, cdouble(1.0, 0.0))) {
        throw std::invalid_argument("Gate1Q: matrix is not unitary");
    }
}

Gate1Q Gate1Q::dagger() const {
    return Gate1Q(std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3]));
}

Gate1Q operator*(const Gate1Q& a, const Gate1Q& b) {
    return Gate1Q(a.at(0, 0) * b.at(0, 0) + a.at(0, 1) * b.at(1, 0),
                  a.at(0, 0) * b.at(0, 1) + a.at(0, 1) * b.at(1, 1),
                  a.at(1, 0) * b.at(0, 0) + a.at(1, 1) * b.at(1, 0),
                  a.at(1, 0) * b.at(0, 1) + a.at(1, 1) * b.at(1, 1));
}

namespace gates {

Gate1Q identity() { return Gate1Q(1.0, 0.0, 0.0, 1.0); }

Gate1Q h() {
    const double r = 1.0 / std::sqrt(2.0);
    return Gate1Q(r, r, r, -r);
}

Gate1Q x() { return Gate1Q(0.0, 1.0, 1.0, 0.0); }

Gate1Q y() { return Gate1Q(0.0, cdouble(0.0, -1.0), cdouble(0.0, 1.0), 0.0); }

Gate1Q z() { return Gate1Q(1.0, 0.0, 0.0, -1.0); }

Gate1Q rz(double alpha) {
    return Gate1Q(std::polar(1.0, -alpha / 2.0), 0.0, 0.0, std::polar(1.0, alpha / 2.0));
}

}  // namespace gates

MeasurementBasis MeasurementBasis::computational() {
    return MeasurementBasis(Kind::computational, 0.0);
}

MeasurementBasis MeasurementBasis::planar(double alpha) {
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("MeasurementBasis: planar angle must be finite");
    }
    return MeasurementBasis(Kind::planar, alpha);
}

double MeasurementBasis::alpha() const {
    if (kind_ != Kind::planar) {
        throw std::logic_error("MeasurementBasis: computational basis has no angle");
    }
    return alpha_;
}

StateVector::StateVector(int num_qubits, int cap) : n_(num_qubits) {
    if (num_qubits < 0) {
        throw std::invalid_argument("StateVector: negative qubit count");
    }
    if (num_qubits > cap) {
        throw std::invalid_argument("StateVector: register of " + std::to_string(num_qubits) +
                                    " qubits exceeds the cap of " + std::to_string(cap));
    }
    amp_.assign(1ull << n_, cdouble(0.0, 0.0));
    amp_[0] = 1.0;
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index, int cap) {
    if (num_qubits < 1) {
        throw std::invalid_argument("basis_state: register needs at least one qubit");
    }
    StateVector st(num_qubits, cap);
    if (index >= st.dim()) {
        throw std::out_of_range("basis_state: index outside the register");
    }
    st.amp_[0] = 0.0;
    st.amp_[index] = 1.0;
    return st;
}

StateVector StateVector::from_amplitudes(std::vector<cdouble> amplitudes, int cap) {
    const std::uint64_t dim = amplitudes.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("from_amplitudes: size must be a power of two");
    }
    int n = 0;
    while ((1ull << n) < dim) ++n;
    StateVector st(n, cap);
    double norm2 = 0.0;
    for (const cdouble& a : amplitudes) norm2 += std::norm(a);
    if (norm2 <= 0.0 || !std::isfinite(norm2)) {
        throw std::invalid_argument("from_amplitudes: vector has no norm");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cdouble& a : amplitudes) a *= inv;
    st.amp_ = std::move(amplitudes);
    return st;
}

cdouble StateVector::amplitude(std::uint64_t index) const {
    if (index >= amp_.size()) {
        throw std::out_of_range("amplitude: index outside the register");
    }
    return amp_[index];
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cdouble& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " outside register of " + std::to_string(n_));
    }
}

void StateVector::apply(const Gate1Q& g, int qubit) {
    check_qubit(qubit);
    const std::uint64_t m = mask_of(qubit);
    const std::uint64_t step = m << 1;
    const cdouble g00 = g.at(0, 0), g01 = g.at(0, 1), g10 = g.at(1, 0), g11 = g.at(1, 1);
    for (std::uint64_t hi = 0; hi < amp_.size(); hi += step) {
        for (std::uint64_t lo = hi; lo < hi + m; ++lo) {
            const cdouble a0 = amp_[lo];
            const cdouble a1 = amp_[lo | m];
            amp_[lo] = g00 * a0 + g01 * a1;
            amp_[lo | m] = g10 * a0 + g11 * a1;
        }
    }
}

void StateVector::apply_cz(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("apply_cz: qubits must be distinct");
    }
    const std::uint64_t m = mask_of(a) | mask_of(b);
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        if ((i & m) == m) amp_[i] = -amp_[i];
    }
}

void StateVector::apply_ccz(int a, int b, int c) {
    check_qubit(a);
    check_qubit(b);
    check_qubit(c);
    if (a == b || a == c || b == c) {
        throw std::invalid_argument("apply_ccz: qubits must be distinct");
    }
    const std::uint64_t m = mask_of(a) | mask_of(b) | mask_of(c);
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        if ((i & m) == m) amp_[i] = -amp_[i];
    }
}

double StateVector::outcome_probability(int qubit, const MeasurementBasis& basis,
                                        int outcome) const {
    check_qubit(qubit);
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    const std::uint64_t m = mask_of(qubit);
    const std::uint64_t step = m << 1;
    double p = 0.0;
    if (basis.kind() == MeasurementBasis::Kind::computational) {
        const std::uint64_t off = outcome ? m : 0;
        for (std::uint64_t hi = 0; hi < amp_.size(); hi += step) {
            for (std::uint64_t lo = hi; lo < hi + m; ++lo) {
                p += std::norm(amp_[lo | off]);
            }
        }
    } else {
        // |<alpha_o | psi>|^2 summed over the rest of the register, with
        // <alpha_o| = (<0| + (-1)^o e^{-i alpha} <1|)/sqrt(2).
        const cdouble ph = std::polar(1.0, -basis.alpha());
        const double sign = outcome ? -1.0 : 1.0;
        for (std::uint64_t hi = 0; hi < amp_.size(); hi += step) {
            for (std::uint64_t lo = hi; lo < hi + m; ++lo) {
                p += 0.5 * std::norm(amp_[lo] + sign * ph * amp_[lo | m]);
            }
        }
    }
    return p;
}

MeasureResult StateVector::measure(int qubit, const MeasurementBasis& basis,
                                   std::mt19937_64& rng) {
    const double p0 = outcome_probability(qubit, basis, 0);
    int outcome;
    if (p0 >= 1.0 - impossible_branch_tol) {
        outcome = 0;
    } else if (p0 <= impossible_branch_tol) {
        outcome = 1;
    } else {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        outcome = unit(rng) < p0 ? 0 : 1;
    }
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    return collapse(qubit, basis, outcome, p);
}

MeasureResult StateVector::force_measure(int qubit, const MeasurementBasis& basis, int outcome) {
    const double p = outcome_probability(qubit, basis, outcome);
    if (p < impossible_branch_tol) {
        throw ImpossibleBranchError("force_measure: requested outcome has probability " +
                                    std::to_string(p));
    }
    return collapse(qubit, basis, outcome, p);
}

MeasureResult StateVector::collapse(int qubit, const MeasurementBasis& basis, int outcome,
                                    double prob) {
    const std::uint64_t m = mask_of(qubit);
    const std::uint64_t low = m - 1;
    std::vector<cdouble> next(amp_.size() >> 1);
    const double inv = 1.0 / std::sqrt(prob);
    if (basis.kind() == MeasurementBasis::Kind::computational) {
        const std::uint64_t off = outcome ? m : 0;
        for (std::uint64_t r = 0; r < next.size(); ++r) {
            const std::uint64_t i0 = ((r & ~low) << 1) | (r & low);
            next[r] = amp_[i0 | off] * inv;
        }
    } else {
        const cdouble ph = std::polar(1.0, -basis.alpha());
        const double sign = outcome ? -1.0 : 1.0;
        const double scale = inv / std::sqrt(2.0);
        for (std::uint64_t r = 0; r < next.size(); ++r) {
            const std::uint64_t i0 = ((r & ~low) << 1) | (r & low);
            next[r] = (amp_[i0] + sign * ph * amp_[i0 | m]) * scale;
        }
    }
    MeasureResult res;
    res.outcome = outcome;
    res.probability = prob;
    res.index_map.resize(n_);
    for (int q = 0; q < n_; ++q) {
        res.index_map[q] = q < qubit ? q : (q == qubit ? -1 : q - 1);
    }
    n_ -= 1;
    amp_ = std::move(next);
    return res;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cdouble s(0.0, 0.0);
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace mbqc
