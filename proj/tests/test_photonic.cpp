#include <cmath>

#include "doctest.h"
#include "mbqc/photonic.hpp"

using namespace mbqc;

TEST_CASE("mode bookkeeping rejects misuse") {
    PhotonRegister reg(4);
    CHECK_THROWS_AS(PhotonRegister(0), std::invalid_argument);
    CHECK_THROWS_AS(PhotonRegister(25), std::invalid_argument);
    CHECK_THROWS_AS(reg.rotate(1, gates::h()), std::invalid_argument);  // not prepared yet
    reg.set_plus(1);
    CHECK(reg.prepared(1));
    CHECK(reg.alive(1));
    CHECK_THROWS_AS(reg.set_plus(1), std::invalid_argument);  // double prepare
    CHECK_THROWS_AS(reg.set_pair(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(reg.set_plus(5), std::out_of_range);
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(fuse(reg, 1, 2, rng), std::invalid_argument);  // mode 2 unprepared
    CHECK_THROWS_AS(fuse(reg, 1, 1, rng), std::invalid_argument);
}

TEST_CASE("a fresh pair carries one entangling bond") {
    PhotonRegister reg(2);
    reg.set_pair(1, 2);
    StateVector want(2);
    want.apply(gates::h(), 0);
    want.apply(gates::h(), 1);
    want.apply_cz(0, 1);
    CHECK(fidelity(reg.state(), want) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fusing two plus states succeeds half the time") {
    PhotonRegister reg(2);
    reg.set_plus(1);
    reg.set_plus(2);
    const FusionOutcome out = fuse_forced(reg, 1, 2);
    CHECK(out.success);
    CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out.post_state.alive(1));
    CHECK(out.post_state.alive(2));
    // Success keeps the equal-polarization part: (|00> + |11>)/sqrt(2).
    const StateVector& st = out.post_state.state();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(st.amplitude(0) - cdouble(r, 0.0)) < 1e-12);
    CHECK(std::abs(st.amplitude(3) - cdouble(r, 0.0)) < 1e-12);
    CHECK(std::abs(st.amplitude(1)) < 1e-12);
    CHECK(std::abs(st.amplitude(2)) < 1e-12);
}

TEST_CASE("deterministic branches skip the coin flip") {
    // H on one half of a fresh pair gives (|00> + |11>)/sqrt(2): fusion
    // succeeds with certainty and must not consume randomness.
    PhotonRegister reg(2);
    reg.set_pair(1, 2);
    reg.rotate(1, gates::h());
    std::mt19937_64 rng(11);
    const FusionOutcome out = fuse(reg, 1, 2, rng);
    CHECK(out.success);
    CHECK(out.probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rng() == std::mt19937_64(11)());

    // A further X on that half gives (|01> + |10>)/sqrt(2): certain failure.
    PhotonRegister bad(2);
    bad.set_pair(1, 2);
    bad.rotate(1, gates::h());
    bad.rotate(1, gates::x());
    std::mt19937_64 rng2(12);
    const FusionOutcome lost = fuse(bad, 1, 2, rng2);
    CHECK(!lost.success);
    CHECK(lost.probability == doctest::Approx(1.0).epsilon(1e-12));  // failure branch weight
    CHECK(rng2() == std::mt19937_64(12)());
    CHECK(!lost.post_state.alive(1));
    CHECK(!lost.post_state.alive(2));
    PhotonRegister after = lost.post_state;
    CHECK_THROWS_AS(after.rotate(1, gates::h()), std::invalid_argument);
    CHECK_THROWS_AS(fuse_forced(bad, 1, 2), ImpossibleBranchError);
}

TEST_CASE("branch growth costs a quarter per query vertex") {
    std::mt19937_64 rng(21);
    int hits = 0;
    bool saw_success_quarter = false;
    bool saw_first_failure_half = false;
    const int trials = 2000;
    for (int t = 0; t < trials; ++t) {
        PhotonRegister reg(4);
        reg.set_pair(1, 2);
        reg.set_plus(3);
        reg.set_plus(4);
        const FusionOutcome out = build_branch(reg, {1, 2}, {3, 4}, rng);
        if (out.success) {
            ++hits;
            CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-12));
            CHECK(out.post_state.alive(3));
            CHECK(out.post_state.alive(4));
            saw_success_quarter = true;
        } else if (out.post_state.alive(4)) {
            // Failure at the first fusion leaves the second fresh mode
            // untouched; that branch has weight 1/2.
            CHECK(!out.post_state.alive(3));
            CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-12));
            saw_first_failure_half = true;
        } else {
            // Failure at the second fusion: 1/2 success then 1/2 failure.
            CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-12));
        }
    }
    CHECK(saw_success_quarter);
    CHECK(saw_first_failure_half);
    const double emp = double(hits) / trials;
    CHECK(emp > 0.2);
    CHECK(emp < 0.3);
}

TEST_CASE("branch growth validates its fresh modes") {
    PhotonRegister reg(4);
    reg.set_pair(1, 2);
    reg.set_plus(3);
    reg.rotate(3, gates::h());  // now |0>, not a valid fresh mode
    reg.set_plus(4);
    std::mt19937_64 rng(3);
    CHECK_THROWS_AS(build_branch(reg, {1, 2}, {3, 4}, rng), std::invalid_argument);
}

TEST_CASE("the default chip network rebuilds the six-qubit resource") {
    const FusionNetwork net = default_chip_network();
    CHECK(net.num_modes == 6);
    CHECK(net.ops.size() == 16);
    REQUIRE(net.target_state.has_value());

    std::mt19937_64 rng(1);
    const ChipRun run = generate_chip_state(net, 0, rng);
    CHECK(run.trials == 0);
    CHECK(run.successes == 0);
    CHECK(std::abs(run.analytic_probability - 1.0 / 32.0) < 1e-12);
    REQUIRE(run.conditional_state.has_value());
    REQUIRE(run.target_fidelity.has_value());
    CHECK(*run.target_fidelity >= 1.0 - 1e-12);
}

TEST_CASE("sampled generation matches the analytic rate") {
    const FusionNetwork net = default_chip_network();
    std::mt19937_64 rng(77);
    const ChipRun run = generate_chip_state(net, 5000, rng);
    CHECK(run.trials == 5000);
    CHECK(std::abs(run.empirical_probability - 1.0 / 32.0) <= 0.01);
}

TEST_CASE("a network that can never succeed reports zero without a state") {
    FusionNetwork net;
    net.num_modes = 2;
    using Kind = NetworkOp::Kind;
    net.ops = {
        NetworkOp{Kind::pair, 1, 2, "", 0.0},
        NetworkOp{Kind::rotate, 1, 0, "h", 0.0},
        NetworkOp{Kind::rotate, 1, 0, "x", 0.0},
        NetworkOp{Kind::fuse, 1, 2, "", 0.0},
    };
    std::mt19937_64 rng(9);
    const ChipRun run = generate_chip_state(net, 50, rng);
    CHECK(run.analytic_probability == doctest::Approx(0.0));
    CHECK(run.successes == 0);
    CHECK(!run.conditional_state.has_value());
    CHECK(!run.target_fidelity.has_value());
}

TEST_CASE("invalid network operations propagate") {
    FusionNetwork net;
    net.num_modes = 2;
    net.ops = {NetworkOp{NetworkOp::Kind::fuse, 1, 2, "", 0.0}};  // nothing prepared
    std::mt19937_64 rng(2);
    CHECK_THROWS_AS(generate_chip_state(net, 10, rng), std::invalid_argument);
}

TEST_CASE("success probability scales as a quarter per added branch") {
    const ScalingEstimate two = scaling_success_probability(2);
    CHECK(two.branches == 2);
    CHECK(two.probability == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(scaling_success_probability(3).probability ==
          doctest::Approx(0.25 * 0.25 * 0.25).epsilon(1e-12));
    CHECK_THROWS_AS(scaling_success_probability(1), std::invalid_argument);
}

TEST_CASE("network text form round trips") {
    const FusionNetwork net = default_chip_network();
    const std::string text = to_text(net);
    const FusionNetwork back = network_from_text(text);
    CHECK(back.num_modes == net.num_modes);
    REQUIRE(back.ops.size() == net.ops.size());
    CHECK(to_text(back) == text);
    CHECK_THROWS_AS(network_from_text("network 2\nplus 1\nspin 1 h\n"), std::invalid_argument);
    CHECK_THROWS_AS(network_from_text("plus 1\n"), std::invalid_argument);  // missing header
    CHECK_THROWS_AS(network_from_text("network 2\nrot 1 rz\n"), std::invalid_argument);
    CHECK_THROWS_AS(network_from_text("network 2\nrot 1 q\n"), std::invalid_argument);
}
