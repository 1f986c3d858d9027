#include "mbqc/pattern.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mbqc {

int OutcomeExponent::eval(const std::map<int, int>& outcomes) const {
    int sum = constant;
    for (int label : labels) {
        const auto it = outcomes.find(label);
        if (it == outcomes.end()) {
            throw std::invalid_argument("OutcomeExponent: no outcome recorded for vertex " +
                                        std::to_string(label));
        }
        sum += it->second;
    }
    return sum & 1;
}

Gate1Q eval_feedforward(const FeedForwardSpec& spec, const std::map<int, int>& outcomes) {
    Gate1Q g = gates::identity();
    for (const FeedForwardTerm& term : spec.terms) {
        if (term.exponent.eval(outcomes) == 0) continue;
        switch (term.kind) {
            case FeedForwardTerm::Kind::hadamard: g = g * gates::h(); break;
            case FeedForwardTerm::Kind::sigma_x: g = g * gates::x(); break;
            case FeedForwardTerm::Kind::sigma_z: g = g * gates::z(); break;
            case FeedForwardTerm::Kind::rz: g = g * gates::rz(term.angle); break;
        }
    }
    return g;
}

namespace {

using Kind = FeedForwardTerm::Kind;

OutcomeExponent always() { return OutcomeExponent{1, {}}; }
OutcomeExponent on(std::vector<int> labels) { return OutcomeExponent{0, std::move(labels)}; }

FeedForwardTerm term(Kind k, OutcomeExponent e, double angle = 0.0) {
    return FeedForwardTerm{k, angle, std::move(e)};
}

constexpr double quarter_turn = -std::numbers::pi / 2.0;

// H z^{s_c} or, in the rotated variant, H z^{s_c + s_4} Rz(-pi/2).
FeedForwardSpec outer_correction(int c, bool rotated) {
    FeedForwardSpec spec;
    if (rotated) {
        spec.terms = {term(Kind::hadamard, always()), term(Kind::sigma_z, on({c, 4})),
                      term(Kind::rz, always(), quarter_turn)};
        spec.notation = "H.chi^{s" + std::to_string(c) + "}";
    } else {
        spec.terms = {term(Kind::hadamard, always()), term(Kind::sigma_z, on({c}))};
        spec.notation = "H.z^{s" + std::to_string(c) + "}";
    }
    return spec;
}

// Center correction: zeta = z^{s_4} x^{s_2+s_5} H, optionally followed
// (on the right) by Rz(-pi/2) or sigma_z, optionally prefixed by an
// unconditional sigma_x.
FeedForwardSpec center_correction(bool x_prefix, bool rotated, bool z_suffix) {
    FeedForwardSpec spec;
    std::string name = "zeta";
    if (x_prefix) {
        spec.terms.push_back(term(Kind::sigma_x, always()));
        name = "x." + name;
    }
    spec.terms.push_back(term(Kind::sigma_z, on({4})));
    spec.terms.push_back(term(Kind::sigma_x, on({2, 5})));
    spec.terms.push_back(term(Kind::hadamard, always()));
    if (rotated) {
        spec.terms.push_back(term(Kind::rz, always(), quarter_turn));
        name += "_t";
    }
    if (z_suffix) {
        spec.terms.push_back(term(Kind::sigma_z, always()));
        name += ".z";
    }
    spec.notation = name;
    return spec;
}

}  // namespace

MeasurementPattern pattern_for_bb(BlackBoxId id) {
    const int idx = static_cast<int>(id);
    const bool m2_planar = idx >= 4;
    const bool m5_planar = idx == 2 || idx == 3 || idx == 6 || idx == 7;
    const double half_pi = std::numbers::pi / 2.0;

    MeasurementPattern p;
    p.box = id;
    p.steps = {
        {2, m2_planar ? MeasurementBasis::planar(half_pi) : MeasurementBasis::computational()},
        {4, MeasurementBasis::planar(0.0)},
        {5, m5_planar ? MeasurementBasis::planar(half_pi) : MeasurementBasis::computational()},
    };
    p.feedforward[1] = outer_correction(2, /*rotated=*/idx >= 4);
    p.feedforward[3] = center_correction(/*x_prefix=*/idx % 2 == 1,
                                         /*rotated=*/idx >= 2 && idx <= 5,
                                         /*z_suffix=*/idx >= 6);
    p.feedforward[6] = outer_correction(5, /*rotated=*/m5_planar);
    return p;
}

namespace {

MbqcRunRecord run_impl(const StateVector& resource, const MeasurementPattern& pattern,
                       std::mt19937_64* rng, const std::vector<int>* forced) {
    MbqcRunRecord rec;
    rec.bb = pattern.box;
    StateVector st = resource;
    std::map<int, int> slot;
    for (int l = 1; l <= resource.num_qubits(); ++l) slot[l] = l - 1;

    for (std::size_t k = 0; k < pattern.steps.size(); ++k) {
        const MeasureStep& step = pattern.steps[k];
        const auto it = slot.find(step.label);
        if (it == slot.end()) {
            throw std::invalid_argument("run_pattern: vertex " + std::to_string(step.label) +
                                        " is not in the register");
        }
        MeasureResult r = forced ? st.force_measure(it->second, step.basis, (*forced)[k])
                                 : st.measure(it->second, step.basis, *rng);
        rec.outcomes[step.label] = r.outcome;
        rec.probability *= r.probability;
        for (auto pos = slot.begin(); pos != slot.end();) {
            const int mapped = r.index_map[pos->second];
            if (mapped < 0) {
                pos = slot.erase(pos);
            } else {
                pos->second = mapped;
                ++pos;
            }
        }
    }

    rec.pre_ff_state = st;
    for (const auto& [label, spec] : pattern.feedforward) {
        const auto it = slot.find(label);
        if (it == slot.end()) {
            throw std::invalid_argument("run_pattern: correction target " +
                                        std::to_string(label) + " was measured away");
        }
        st.apply(eval_feedforward(spec, rec.outcomes), it->second);
    }
    rec.post_ff_state = std::move(st);
    rec.slot_of_label = std::move(slot);
    return rec;
}

}  // namespace

MbqcRunRecord run_pattern(const StateVector& resource, const MeasurementPattern& pattern,
                          std::mt19937_64& rng) {
    return run_impl(resource, pattern, &rng, nullptr);
}

MbqcRunRecord run_pattern_forced(const StateVector& resource, const MeasurementPattern& pattern,
                                 const std::vector<int>& outcomes) {
    if (outcomes.size() != pattern.steps.size()) {
        throw std::invalid_argument("run_pattern_forced: need one outcome per step");
    }
    for (int o : outcomes) {
        if (o != 0 && o != 1) {
            throw std::invalid_argument("run_pattern_forced: outcomes must be 0 or 1");
        }
    }
    return run_impl(resource, pattern, nullptr, &outcomes);
}

std::vector<MbqcRunRecord> enumerate_branches(const StateVector& resource,
                                              const MeasurementPattern& pattern) {
    const std::size_t k = pattern.steps.size();
    if (k > 16) {
        throw std::invalid_argument("enumerate_branches: too many steps to enumerate");
    }
    std::vector<MbqcRunRecord> records;
    double total = 0.0;
    for (std::uint64_t b = 0; b < (1ull << k); ++b) {
        std::vector<int> outcomes(k);
        for (std::size_t i = 0; i < k; ++i) {
            outcomes[i] = static_cast<int>((b >> (k - 1 - i)) & 1);
        }
        try {
            records.push_back(run_pattern_forced(resource, pattern, outcomes));
            total += records.back().probability;
        } catch (const ImpossibleBranchError&) {
        }
    }
    if (std::abs(total - 1.0) > pipeline_tol) {
        throw std::runtime_error("enumerate_branches: branch probabilities sum to " +
                                 std::to_string(total));
    }
    return records;
}

std::string to_text(const MeasurementPattern& pattern) {
    std::ostringstream out;
    out << "pattern " << (pattern.box ? to_string(*pattern.box) : "custom") << "\n";
    out << std::setprecision(17);
    for (const MeasureStep& step : pattern.steps) {
        out << "measure " << step.label;
        if (step.basis.kind() == MeasurementBasis::Kind::computational) {
            out << " computational\n";
        } else {
            out << " planar " << step.basis.alpha() << "\n";
        }
    }
    for (const auto& [label, spec] : pattern.feedforward) {
        out << "feedforward " << label << " " << spec.notation << "\n";
    }
    return out.str();
}

}  // namespace mbqc
