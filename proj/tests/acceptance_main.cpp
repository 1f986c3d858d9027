// Acceptance gate for the toolkit. Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failed criteria. The
// tolerances are deliberately written out as literals next to each
// check so that loosening any of them is a visible diff.
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mbqc/algorithms.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/oracle.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/photonic.hpp"
#include "mbqc/state.hpp"

#ifndef MBQC_CLI_PATH
#error "MBQC_CLI_PATH must point at the built command-line binary"
#endif

namespace {

using namespace mbqc;

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "[" << index << "/9] " << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// Circuit-model reference for one black box: H on the query wires of
// U_f |+>|+>|->, reordered into the slot layout left by the cluster run
// (query bit 2, then the target wire, then query bit 1).
StateVector circuit_reference(BlackBoxId id) {
    StateVector st(3);
    st.apply(gates::h(), 0);
    st.apply(gates::h(), 1);
    st.apply(gates::x(), 2);
    st.apply(gates::h(), 2);
    standard_oracle_unitary(bb_truth_table(id))(st);
    st.apply(gates::h(), 0);
    st.apply(gates::h(), 1);
    std::vector<cdouble> ref(8);
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int x2 = 0; x2 < 2; ++x2) {
            for (int y = 0; y < 2; ++y) {
                ref[(x2 << 2) | (y << 1) | x1] = st.amplitude((x1 << 2) | (x2 << 1) | y);
            }
        }
    }
    return StateVector::from_amplitudes(std::move(ref));
}

void criterion_branch_equivalence() {
    const double tol = 1e-10;
    const StateVector encoded = apply_y_encoding(six_qubit_resource().first);
    double worst = 0.0;
    for (BlackBoxId id : all_black_boxes()) {
        const StateVector ref = circuit_reference(id);
        const MeasurementPattern pattern = pattern_for_bb(id);
        for (int branch = 0; branch < 8; ++branch) {
            const std::vector<int> forced = {(branch >> 2) & 1, (branch >> 1) & 1, branch & 1};
            const MbqcRunRecord rec = run_pattern_forced(encoded, pattern, forced);
            worst = std::max(worst, 1.0 - fidelity(rec.post_ff_state, ref));
        }
    }
    report(1, "all 64 corrected cluster branches match the circuit reference", worst <= tol,
           "worst residual " + fmt(worst) + ", tol " + fmt(tol));
}

void criterion_dj_verdicts() {
    const double tol = 1e-10;
    std::mt19937_64 rng(101);
    double worst = 0.0;
    bool verdicts_ok = true;
    for (BlackBoxId id : all_black_boxes()) {
        const OracleClass expected = classify(bb_truth_table(id));
        const auto [v, rec] = run_dj_mbqc(id, rng);
        const auto it = v.query_register_distribution.find("00");
        const double p00 = it == v.query_register_distribution.end() ? 0.0 : it->second;
        const double want = expected == OracleClass::constant ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(p00 - want));
        if (v.verdict != expected) verdicts_ok = false;
        for (bool refined : {false, true}) {
            if (run_dj_circuit(bb_truth_table(id), refined, rng).verdict != expected) {
                verdicts_ok = false;
            }
        }
    }
    report(2, "one cluster query decides constant vs balanced for every box",
           verdicts_ok && worst <= tol,
           "worst P(00) deviation " + fmt(worst) + ", tol " + fmt(tol));
}

void criterion_bv_recovery() {
    const double tol = 1e-10;
    std::mt19937_64 rng(102);
    double worst = 0.0;
    bool ok = true;
    ok &= bb_for_bv("00") == BlackBoxId::i;
    ok &= bb_for_bv("01") == BlackBoxId::v;
    ok &= bb_for_bv("10") == BlackBoxId::iii;
    ok &= bb_for_bv("11") == BlackBoxId::vii;
    for (const std::string s : {"00", "01", "10", "11"}) {
        const auto [r, rec] = run_bv_mbqc(s, rng);
        ok &= r.recovered_s == s;
        ok &= r.bb == bb_for_bv(s);
        worst = std::max(worst, 1.0 - r.probability);
        for (bool refined : {false, true}) {
            const BvResult c = run_bv_circuit(s, refined, rng);
            ok &= c.recovered_s == s;
            worst = std::max(worst, 1.0 - c.probability);
        }
    }
    report(3, "every two-bit hidden string is recovered exactly in one query",
           ok && worst <= tol, "worst 1-p " + fmt(worst) + ", tol " + fmt(tol));
}

void criterion_delta_identity() {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) ok &= delta_identity_holds(n);
    report(4, "the interference sum vanishes exactly off the hidden string", ok,
           "integer-exact for 1..6 input bits");
}

void criterion_graph_search() {
    const double tol = 1e-12;
    const auto [target, layout] = six_qubit_resource();
    const std::vector<EdgeSearchMatch> matches = search_six_qubit_edge_sets(target, tol);
    bool ok = matches.size() == 1;
    double residual = 1.0;
    if (ok) {
        const EdgeSearchMatch& m = matches.front();
        ok &= m.z_corrections.empty();
        ok &= m.graph == layout.graph;
        ok &= m.graph == dj_bv_graph(2).first;
        residual = 1.0 - fidelity(cluster_from_graph(m.graph), target);
        ok &= residual <= tol;
    }
    report(5, "exactly one of the 32768 edge sets reproduces the resource", ok,
           std::to_string(matches.size()) + " match(es), residual " + fmt(residual) +
               ", tol " + fmt(tol));
}

void criterion_three_bit_oracle() {
    std::mt19937_64 rng(103);
    const std::vector<int> want = {0, 0, 0, 1, 1, 1, 1, 0};
    const OracleSpec induced = dj3_example_circuit().induced_table();
    bool ok = induced.n == 3 && induced.table == want;
    ok &= classify(induced) == OracleClass::balanced;
    ok &= run_dj_circuit(induced, false, rng).verdict == OracleClass::balanced;
    const std::vector<int> signs = dj3_refined_example_circuit().induced_phase_signs();
    ok &= signs.size() == want.size();
    for (std::size_t x = 0; ok && x < want.size(); ++x) {
        ok &= signs[x] == (want[x] ? -1 : 1);
    }
    report(6, "the three-bit example oracle induces its truth table in both forms", ok,
           "gate form and phase form agree entry by entry");
}

void criterion_fusion_statistics() {
    const double exact_tol = 1e-12;
    const double mc_tol_fuse = 0.01;
    const double mc_tol_chip = 0.005;
    bool ok = true;
    std::ostringstream detail;

    {
        PhotonRegister reg(2);
        reg.set_plus(1);
        reg.set_plus(2);
        const double p = fuse_forced(reg, 1, 2).probability;
        ok &= std::abs(p - 0.5) <= exact_tol;

        std::mt19937_64 rng(104);
        int hits = 0;
        const int trials = 100000;
        for (int t = 0; t < trials; ++t) {
            PhotonRegister fresh(2);
            fresh.set_plus(1);
            fresh.set_plus(2);
            if (fuse(fresh, 1, 2, rng).success) ++hits;
        }
        const double emp = double(hits) / trials;
        ok &= std::abs(emp - 0.5) <= mc_tol_fuse;
        detail << "fuse p=" << fmt(p) << " emp=" << fmt(emp);
    }
    {
        PhotonRegister reg(4);
        reg.set_pair(1, 2);
        reg.set_plus(3);
        reg.set_plus(4);
        FusionOutcome first = fuse_forced(reg, 2, 3);
        first.post_state.rotate(3, gates::h());
        const FusionOutcome second = fuse_forced(first.post_state, 3, 4);
        const double p_branch = first.probability * second.probability;
        ok &= std::abs(p_branch - 0.25) <= exact_tol;

        std::mt19937_64 rng(105);
        int hits = 0;
        const int trials = 100000;
        for (int t = 0; t < trials; ++t) {
            PhotonRegister fresh(4);
            fresh.set_pair(1, 2);
            fresh.set_plus(3);
            fresh.set_plus(4);
            if (build_branch(fresh, {1, 2}, {3, 4}, rng).success) ++hits;
        }
        const double emp = double(hits) / trials;
        ok &= std::abs(emp - 0.25) <= mc_tol_fuse;
        detail << "; branch p=" << fmt(p_branch) << " emp=" << fmt(emp);
    }
    {
        std::mt19937_64 rng(106);
        const ChipRun run = generate_chip_state(default_chip_network(), 100000, rng);
        ok &= std::abs(run.analytic_probability - 1.0 / 32.0) <= exact_tol;
        ok &= run.target_fidelity.has_value() && *run.target_fidelity >= 1.0 - 1e-10;
        ok &= std::abs(run.empirical_probability - 1.0 / 32.0) <= mc_tol_chip;
        detail << "; chip analytic=" << fmt(run.analytic_probability)
               << " emp=" << fmt(run.empirical_probability);
    }
    report(7, "fusion success statistics match their closed forms", ok, detail.str());
}

void criterion_numerical_hygiene() {
    const double tol = 1e-12;
    std::mt19937_64 rng(107);
    double worst_norm = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + int(rng() % 5);
        StateVector st(n);
        std::uniform_real_distribution<double> angle(-3.2, 3.2);
        for (int op = 0; op < 100; ++op) {
            const int kind = int(rng() % 6);
            const int q = int(rng() % n);
            switch (kind) {
                case 0: st.apply(gates::h(), q); break;
                case 1: st.apply(gates::x(), q); break;
                case 2: st.apply(gates::y(), q); break;
                case 3: st.apply(gates::z(), q); break;
                case 4: st.apply(gates::rz(angle(rng)), q); break;
                case 5: {
                    const int r = int(rng() % n);
                    if (r != q) st.apply_cz(q, r);
                    break;
                }
            }
        }
        worst_norm = std::max(worst_norm, std::abs(st.norm() - 1.0));
    }

    double worst_sum = 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + int(rng() % 6);
        std::vector<cdouble> amp(1ull << n);
        for (cdouble& a : amp) a = cdouble(gauss(rng), gauss(rng));
        const StateVector st = StateVector::from_amplitudes(std::move(amp));
        const int q = int(rng() % n);
        const MeasurementBasis basis = (rng() % 2) ? MeasurementBasis::planar(angle(rng))
                                                   : MeasurementBasis::computational();
        const double sum =
            st.outcome_probability(q, basis, 0) + st.outcome_probability(q, basis, 1);
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }
    report(8, "long gate strings and outcome sums stay normalized",
           worst_norm <= tol && worst_sum <= tol,
           "worst norm drift " + fmt(worst_norm) + ", worst probability sum drift " +
               fmt(worst_sum) + ", tol " + fmt(tol));
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(MBQC_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

void criterion_cli_determinism() {
    const std::vector<std::string> commands = {
        "verify --seed 7",
        "bv --s 11 --seed 9",
        "photonic --trials 2000 --seed 3",
        "dj --bb v --seed 4",
    };
    bool ok = true;
    for (const std::string& cmd : commands) {
        const CliRun a = run_cli(cmd);
        const CliRun b = run_cli(cmd);
        ok &= a.exit_code == 0 && b.exit_code == 0;
        ok &= !a.out.empty() && a.out == b.out;
    }
    report(9, "repeated seeded command-line runs are byte-identical", ok,
           std::to_string(commands.size()) + " commands, two runs each");
}

}  // namespace

int main() {
    criterion_branch_equivalence();
    criterion_dj_verdicts();
    criterion_bv_recovery();
    criterion_delta_identity();
    criterion_graph_search();
    criterion_three_bit_oracle();
    criterion_fusion_statistics();
    criterion_numerical_hygiene();
    criterion_cli_determinism();
    std::cout << (9 - failures) << "/9 criteria passed\n";
    return failures;
}
