#include "mbqc/photonic.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "mbqc/graph.hpp"

namespace mbqc {

PhotonRegister::PhotonRegister(int num_modes)
    : state_(num_modes),
      prepared_(static_cast<std::size_t>(num_modes), false),
      lost_(static_cast<std::size_t>(num_modes), false) {
    if (num_modes < 1) {
        throw std::invalid_argument("PhotonRegister: need at least one mode");
    }
}

std::size_t PhotonRegister::check(int mode) const {
    if (mode < 1 || mode > num_modes()) {
        throw std::out_of_range("PhotonRegister: mode " + std::to_string(mode) +
                                " outside 1.." + std::to_string(num_modes()));
    }
    return static_cast<std::size_t>(mode - 1);
}

std::size_t PhotonRegister::require_fresh(int mode) {
    const std::size_t s = check(mode);
    if (prepared_[s]) {
        throw std::invalid_argument("PhotonRegister: mode " + std::to_string(mode) +
                                    " is already prepared");
    }
    return s;
}

std::size_t PhotonRegister::require_usable(int mode) const {
    const std::size_t s = check(mode);
    if (!prepared_[s]) {
        throw std::invalid_argument("PhotonRegister: mode " + std::to_string(mode) +
                                    " is not prepared");
    }
    if (lost_[s]) {
        throw std::invalid_argument("PhotonRegister: mode " + std::to_string(mode) +
                                    " was lost in a failed fusion");
    }
    return s;
}

void PhotonRegister::set_plus(int mode) {
    const std::size_t s = require_fresh(mode);
    state_.apply(gates::h(), static_cast<int>(s));
    prepared_[s] = true;
}

void PhotonRegister::set_pair(int a, int b) {
    if (a == b) {
        throw std::invalid_argument("PhotonRegister: pair modes must be distinct");
    }
    const std::size_t sa = require_fresh(a);
    const std::size_t sb = require_fresh(b);
    state_.apply(gates::h(), static_cast<int>(sa));
    state_.apply(gates::h(), static_cast<int>(sb));
    state_.apply_cz(static_cast<int>(sa), static_cast<int>(sb));
    prepared_[sa] = true;
    prepared_[sb] = true;
}

void PhotonRegister::rotate(int mode, const Gate1Q& g) {
    const std::size_t s = require_usable(mode);
    state_.apply(g, static_cast<int>(s));
}

double PhotonRegister::equal_weight(std::size_t sa, std::size_t sb) const {
    const int n = state_.num_qubits();
    const std::uint64_t ma = 1ull << (n - 1 - static_cast<int>(sa));
    const std::uint64_t mb = 1ull << (n - 1 - static_cast<int>(sb));
    double p = 0.0;
    const auto& amp = state_.amplitudes();
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if (((i & ma) != 0) == ((i & mb) != 0)) p += std::norm(amp[i]);
    }
    return p;
}

PhotonRegister PhotonRegister::projected(std::size_t sa, std::size_t sb, bool keep_equal) const {
    const int n = state_.num_qubits();
    const std::uint64_t ma = 1ull << (n - 1 - static_cast<int>(sa));
    const std::uint64_t mb = 1ull << (n - 1 - static_cast<int>(sb));
    std::vector<cdouble> amp(state_.amplitudes());
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        const bool equal = ((i & ma) != 0) == ((i & mb) != 0);
        if (equal != keep_equal) amp[i] = cdouble(0.0, 0.0);
    }
    PhotonRegister out = *this;
    out.state_ = StateVector::from_amplitudes(std::move(amp));
    return out;
}

FusionOutcome fuse(const PhotonRegister& reg, int a, int b, std::mt19937_64& rng) {
    if (a == b) {
        throw std::invalid_argument("fuse: modes must be distinct");
    }
    const std::size_t sa = reg.require_usable(a);
    const std::size_t sb = reg.require_usable(b);
    const double p = reg.equal_weight(sa, sb);
    bool success;
    if (p >= 1.0 - impossible_branch_tol) {
        success = true;
    } else if (p <= impossible_branch_tol) {
        success = false;
    } else {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        success = unit(rng) < p;
    }
    FusionOutcome out{success, success ? p : 1.0 - p, reg.projected(sa, sb, success)};
    if (!success) {
        out.post_state.lost_[sa] = true;
        out.post_state.lost_[sb] = true;
    }
    return out;
}

FusionOutcome fuse_forced(const PhotonRegister& reg, int a, int b) {
    if (a == b) {
        throw std::invalid_argument("fuse_forced: modes must be distinct");
    }
    const std::size_t sa = reg.require_usable(a);
    const std::size_t sb = reg.require_usable(b);
    const double p = reg.equal_weight(sa, sb);
    if (p < impossible_branch_tol) {
        throw ImpossibleBranchError("fuse_forced: success branch has probability " +
                                    std::to_string(p));
    }
    return FusionOutcome{true, p, reg.projected(sa, sb, true)};
}

namespace {

void require_usable_mode(const PhotonRegister& reg, int mode) {
    if (!reg.prepared(mode)) {
        throw std::invalid_argument("build_branch: mode " + std::to_string(mode) +
                                    " is not prepared");
    }
    if (!reg.alive(mode)) {
        throw std::invalid_argument("build_branch: mode " + std::to_string(mode) +
                                    " was lost in a failed fusion");
    }
}

}  // namespace

FusionOutcome build_branch(const PhotonRegister& reg, std::pair<int, int> pair,
                           std::pair<int, int> fresh, std::mt19937_64& rng) {
    require_usable_mode(reg, pair.first);
    const int attach = pair.second;
    require_usable_mode(reg, attach);
    for (int mode : {fresh.first, fresh.second}) {
        require_usable_mode(reg, mode);
        const double p_plus =
            reg.state().outcome_probability(mode - 1, MeasurementBasis::planar(0.0), 0);
        if (std::abs(p_plus - 1.0) > algebraic_tol) {
            throw std::invalid_argument("build_branch: mode " + std::to_string(mode) +
                                        " has the wrong preparation, expected |+>");
        }
    }
    const int mediator = fresh.first;
    const int query = fresh.second;

    FusionOutcome first = fuse(reg, attach, mediator, rng);
    if (!first.success) return first;
    first.post_state.rotate(mediator, gates::h());

    FusionOutcome second = fuse(first.post_state, mediator, query, rng);
    second.probability *= first.probability;
    if (second.success) second.post_state.rotate(query, gates::h());
    return second;
}

FusionNetwork default_chip_network() {
    using Kind = NetworkOp::Kind;
    FusionNetwork net;
    net.num_modes = 6;
    const auto plus = [](int m) { return NetworkOp{Kind::plus, m, 0, "", 0.0}; };
    const auto fuse_op = [](int a, int b) { return NetworkOp{Kind::fuse, a, b, "", 0.0}; };
    const auto had = [](int m) { return NetworkOp{Kind::rotate, m, 0, "h", 0.0}; };
    net.ops = {
        plus(3), plus(4), fuse_op(3, 4), had(4),  // seed edge 3-4
        plus(2), fuse_op(3, 2), had(2),           // mediator of the second branch
        plus(1), fuse_op(2, 1), had(1),           // its query vertex
        plus(5), fuse_op(3, 5), had(5),           // mediator of the first branch
        plus(6), fuse_op(5, 6), had(6),           // its query vertex
    };
    net.target_state = six_qubit_resource().first;
    return net;
}

namespace {

Gate1Q gate_by_name(const std::string& name, double angle) {
    if (name == "h") return gates::h();
    if (name == "x") return gates::x();
    if (name == "y") return gates::y();
    if (name == "z") return gates::z();
    if (name == "rz") return gates::rz(angle);
    throw std::invalid_argument("unknown rotation gate '" + name + "'");
}

struct NetworkRun {
    bool success = true;
    double probability = 1.0;
    PhotonRegister reg;
};

// Executes the program; forced = nullptr samples fusions from rng,
// otherwise every fusion is forced onto its success branch.
NetworkRun execute_network(const FusionNetwork& net, std::mt19937_64* rng) {
    NetworkRun run{true, 1.0, PhotonRegister(net.num_modes)};
    for (const NetworkOp& op : net.ops) {
        switch (op.kind) {
            case NetworkOp::Kind::plus: run.reg.set_plus(op.a); break;
            case NetworkOp::Kind::pair: run.reg.set_pair(op.a, op.b); break;
            case NetworkOp::Kind::rotate:
                run.reg.rotate(op.a, gate_by_name(op.gate, op.angle));
                break;
            case NetworkOp::Kind::fuse: {
                FusionOutcome out =
                    rng ? fuse(run.reg, op.a, op.b, *rng) : fuse_forced(run.reg, op.a, op.b);
                run.probability *= out.probability;
                run.reg = std::move(out.post_state);
                if (!out.success) {
                    run.success = false;
                    return run;
                }
                break;
            }
        }
    }
    return run;
}

}  // namespace

ChipRun generate_chip_state(const FusionNetwork& net, std::uint64_t trials,
                            std::mt19937_64& rng) {
    if (net.num_modes < 1) {
        throw std::invalid_argument("generate_chip_state: network has no modes");
    }
    ChipRun result;
    result.trials = trials;
    try {
        NetworkRun forced = execute_network(net, nullptr);
        result.analytic_probability = forced.probability;
        result.conditional_state = forced.reg.state();
        if (net.target_state) {
            result.target_fidelity = fidelity(*result.conditional_state, *net.target_state);
        }
    } catch (const ImpossibleBranchError&) {
        result.analytic_probability = 0.0;
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (execute_network(net, &rng).success) ++result.successes;
    }
    if (trials > 0) {
        result.empirical_probability =
            static_cast<double>(result.successes) / static_cast<double>(trials);
    }
    return result;
}

ScalingEstimate scaling_success_probability(int n) {
    if (n < 2) {
        throw std::invalid_argument("scaling_success_probability: defined for n >= 2");
    }
    return ScalingEstimate{n, std::pow(0.25, n)};
}

std::string to_text(const FusionNetwork& net) {
    std::ostringstream out;
    out << "network " << net.num_modes << "\n" << std::setprecision(17);
    for (const NetworkOp& op : net.ops) {
        switch (op.kind) {
            case NetworkOp::Kind::plus: out << "plus " << op.a << "\n"; break;
            case NetworkOp::Kind::pair: out << "pair " << op.a << " " << op.b << "\n"; break;
            case NetworkOp::Kind::rotate:
                out << "rot " << op.a << " " << op.gate;
                if (op.gate == "rz") out << " " << op.angle;
                out << "\n";
                break;
            case NetworkOp::Kind::fuse: out << "fuse " << op.a << " " << op.b << "\n"; break;
        }
    }
    return out.str();
}

FusionNetwork network_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "network") {
        throw std::invalid_argument("network_from_text: expected leading 'network <n>'");
    }
    FusionNetwork net;
    if (!(in >> net.num_modes) || net.num_modes < 1) {
        throw std::invalid_argument("network_from_text: bad mode count");
    }
    while (in >> tok) {
        NetworkOp op;
        if (tok == "plus") {
            op.kind = NetworkOp::Kind::plus;
            if (!(in >> op.a)) throw std::invalid_argument("network_from_text: bad plus line");
        } else if (tok == "pair") {
            op.kind = NetworkOp::Kind::pair;
            if (!(in >> op.a >> op.b)) {
                throw std::invalid_argument("network_from_text: bad pair line");
            }
        } else if (tok == "rot") {
            op.kind = NetworkOp::Kind::rotate;
            if (!(in >> op.a >> op.gate)) {
                throw std::invalid_argument("network_from_text: bad rot line");
            }
            if (op.gate == "rz") {
                if (!(in >> op.angle)) {
                    throw std::invalid_argument("network_from_text: rz needs an angle");
                }
            } else {
                gate_by_name(op.gate, 0.0);  // validates the name
            }
        } else if (tok == "fuse") {
            op.kind = NetworkOp::Kind::fuse;
            if (!(in >> op.a >> op.b)) {
                throw std::invalid_argument("network_from_text: bad fuse line");
            }
        } else {
            throw std::invalid_argument("network_from_text: unknown directive '" + tok + "'");
        }
        net.ops.push_back(op);
    }
    return net;
}

}  // namespace mbqc
