#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mbqc/state.hpp"

using namespace mbqc;

namespace {

StateVector random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cdouble> amp(1ull << n);
    for (cdouble& a : amp) a = cdouble(gauss(rng), gauss(rng));
    return StateVector::from_amplitudes(std::move(amp));
}

}  // namespace

TEST_CASE("gate construction accepts unitaries and rejects the rest") {
    CHECK_NOTHROW(gates::h());
    CHECK_NOTHROW(gates::rz(0.3));
    CHECK_THROWS_AS(Gate1Q(1.0, 0.0, 0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Gate1Q(1.0, 1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("gate algebra: products compose right to left") {
    // (H * Z) |0> = H |0> = |+>, while (Z * H) |0> = Z |+> = |->.
    StateVector a(1);
    a.apply(gates::h() * gates::z(), 0);
    CHECK(a.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(a.amplitude(1).real() == doctest::Approx(1 / std::sqrt(2.0)));

    StateVector b(1);
    b.apply(gates::z() * gates::h(), 0);
    CHECK(b.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(b.amplitude(1).real() == doctest::Approx(-1 / std::sqrt(2.0)));

    const Gate1Q hh = gates::h() * gates::h();
    CHECK(std::abs(hh.at(0, 0) - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(hh.at(0, 1)) < 1e-12);

    const Gate1Q r = gates::rz(0.7);
    const Gate1Q rr = r * r.dagger();
    CHECK(std::abs(rr.at(0, 0) - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(rr.at(1, 1) - cdouble(1.0, 0.0)) < 1e-12);
}

TEST_CASE("register construction and bounds") {
    StateVector st(3);
    CHECK(st.num_qubits() == 3);
    CHECK(st.dim() == 8);
    CHECK(st.amplitude(0) == cdouble(1.0, 0.0));
    CHECK_THROWS_AS(st.amplitude(8), std::out_of_range);
    CHECK_THROWS_AS(StateVector(-1), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(25), std::invalid_argument);
    CHECK_NOTHROW(StateVector(0));  // empty register
    CHECK(StateVector(0).dim() == 1);

    CHECK(StateVector::basis_state(3, 5).amplitude(5) == cdouble(1.0, 0.0));
    CHECK_THROWS_AS(StateVector::basis_state(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis_state(2, 4), std::out_of_range);
}

TEST_CASE("from_amplitudes validates and normalizes") {
    CHECK_THROWS_AS(StateVector::from_amplitudes({}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({0.0, 0.0}), std::invalid_argument);
    const StateVector st = StateVector::from_amplitudes({3.0, 4.0});
    CHECK(st.amplitude(0).real() == doctest::Approx(0.6));
    CHECK(st.amplitude(1).real() == doctest::Approx(0.8));
}

TEST_CASE("first qubit is the most significant index bit") {
    StateVector st(3);
    st.apply(gates::x(), 0);
    CHECK(st.amplitude(4) == cdouble(1.0, 0.0));
    st.apply(gates::x(), 2);
    CHECK(st.amplitude(5) == cdouble(1.0, 0.0));
}

TEST_CASE("controlled phases flip exactly the all-ones components") {
    StateVector st(2);
    for (int q = 0; q < 2; ++q) st.apply(gates::h(), q);
    st.apply_cz(0, 1);
    CHECK(st.amplitude(0).real() == doctest::Approx(0.5));
    CHECK(st.amplitude(1).real() == doctest::Approx(0.5));
    CHECK(st.amplitude(2).real() == doctest::Approx(0.5));
    CHECK(st.amplitude(3).real() == doctest::Approx(-0.5));
    CHECK_THROWS_AS(st.apply_cz(0, 0), std::invalid_argument);

    StateVector three = StateVector::basis_state(3, 7);
    three.apply_ccz(0, 1, 2);
    CHECK(three.amplitude(7).real() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(three.apply_ccz(0, 1, 1), std::invalid_argument);
}

TEST_CASE("diagonal gates on a control commute with the controlled phase") {
    std::mt19937_64 rng(11);
    StateVector a = random_state(3, rng);
    StateVector b = a;
    a.apply_cz(0, 1);
    a.apply(gates::z(), 0);
    b.apply(gates::z(), 0);
    b.apply_cz(0, 1);
    CHECK(fidelity(a, b) == doctest::Approx(1.0));
}

TEST_CASE("outcome probabilities in both bases") {
    StateVector plus(1);
    plus.apply(gates::h(), 0);
    CHECK(plus.outcome_probability(0, MeasurementBasis::computational(), 0) ==
          doctest::Approx(0.5));
    CHECK(plus.outcome_probability(0, MeasurementBasis::planar(0.0), 0) ==
          doctest::Approx(1.0));
    CHECK(plus.outcome_probability(0, MeasurementBasis::planar(std::numbers::pi), 0) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(plus.outcome_probability(0, MeasurementBasis::computational(), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(plus.outcome_probability(1, MeasurementBasis::computational(), 0),
                    std::out_of_range);
    CHECK_THROWS_AS(MeasurementBasis::computational().alpha(), std::logic_error);
}

TEST_CASE("probabilities of the two outcomes sum to one") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const StateVector st = random_state(n, rng);
        const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        std::uniform_real_distribution<double> angle(-3.0, 3.0);
        for (const MeasurementBasis& basis :
             {MeasurementBasis::computational(), MeasurementBasis::planar(angle(rng))}) {
            const double p0 = st.outcome_probability(q, basis, 0);
            const double p1 = st.outcome_probability(q, basis, 1);
            CHECK(std::abs(p0 + p1 - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("deterministic outcomes do not consume randomness") {
    StateVector st(2);  // |00>
    std::mt19937_64 rng(7);
    const MeasureResult r = st.measure(0, MeasurementBasis::computational(), rng);
    CHECK(r.outcome == 0);
    CHECK(r.probability == doctest::Approx(1.0));
    CHECK(rng() == std::mt19937_64(7)());
}

TEST_CASE("measurement removes the qubit and relabels the survivors") {
    StateVector st(3);
    st.apply(gates::x(), 2);
    std::mt19937_64 rng(1);
    const MeasureResult r = st.measure(1, MeasurementBasis::computational(), rng);
    CHECK(r.outcome == 0);
    CHECK(r.index_map == std::vector<int>{0, -1, 1});
    CHECK(st.num_qubits() == 2);
    CHECK(st.amplitude(1) == cdouble(1.0, 0.0));
}

TEST_CASE("forcing an impossible outcome is an error") {
    StateVector st(1);  // |0>
    CHECK_THROWS_AS(st.force_measure(0, MeasurementBasis::computational(), 1),
                    ImpossibleBranchError);
    CHECK(st.num_qubits() == 1);  // state untouched by the failed attempt
    const MeasureResult r = st.force_measure(0, MeasurementBasis::computational(), 0);
    CHECK(r.probability == doctest::Approx(1.0));
    CHECK(st.num_qubits() == 0);
    CHECK(st.amplitude(0) == cdouble(1.0, 0.0));
}

TEST_CASE("planar projection keeps the matched component") {
    // On (|0>|+> + |1>|->)/sqrt(2), projecting the second qubit onto the
    // alpha = 0 'plus' outcome leaves the first qubit in |0>.
    const double h = 0.5;
    StateVector st = StateVector::from_amplitudes({h, h, h, -h});
    const MeasureResult r = st.force_measure(1, MeasurementBasis::planar(0.0), 0);
    CHECK(r.probability == doctest::Approx(0.5));
    CHECK(st.num_qubits() == 1);
    CHECK(std::abs(st.amplitude(0) - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(st.amplitude(1)) < 1e-12);
}

TEST_CASE("norm is preserved through long random gate sequences") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        StateVector st(n);
        for (int step = 0; step < 100; ++step) {
            const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            switch (rng() % 5) {
                case 0: st.apply(gates::h(), q); break;
                case 1: st.apply(gates::x(), q); break;
                case 2: st.apply(gates::y(), q); break;
                case 3: st.apply(gates::rz(angle(rng)), q); break;
                default: {
                    const int r = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                    if (r != q) st.apply_cz(q, r);
                    break;
                }
            }
        }
        CHECK(std::abs(st.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("overlap helpers agree on phase-shifted copies") {
    std::mt19937_64 rng(31);
    const StateVector a = random_state(3, rng);
    std::vector<cdouble> shifted(a.amplitudes());
    const cdouble phase = std::polar(1.0, 1.2345);
    for (cdouble& z : shifted) z *= phase;
    const StateVector b = StateVector::from_amplitudes(std::move(shifted));
    CHECK(fidelity(a, b) == doctest::Approx(1.0));
    CHECK(equal_up_to_global_phase(a, b));
    CHECK(std::abs(inner_product(a, b)) == doctest::Approx(1.0));
    CHECK(std::abs(inner_product(a, a) - cdouble(1.0, 0.0)) < 1e-12);

    const StateVector c = StateVector::basis_state(2, 0);
    CHECK_THROWS_AS(inner_product(a, c), std::invalid_argument);
}
