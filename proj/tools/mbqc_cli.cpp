#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/algorithms.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/photonic.hpp"
#include "mbqc/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

json complex_json(mbqc::cdouble z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json distribution_json(const std::map<std::string, double>& dist) {
    json j = json::object();
    for (const auto& [key, p] : dist) j[key] = p;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const json& j, bool human, const std::string& human_text) {
    if (human) {
        std::cout << human_text;
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

json verdict_json(const mbqc::DjVerdict& v) {
    json j;
    j["verdict"] = mbqc::to_string(v.verdict);
    j["query_outcome"] = v.query_outcome;
    j["amplitude_all_zeros"] = complex_json(v.amplitude_all_zeros);
    j["distribution"] = distribution_json(v.query_register_distribution);
    return j;
}

std::string verdict_text(const mbqc::DjVerdict& v) {
    std::ostringstream out;
    out << "verdict: " << mbqc::to_string(v.verdict) << "\n";
    out << "query outcome: " << v.query_outcome << "\n";
    out << "amplitude of all-zeros: (" << v.amplitude_all_zeros.real() << ", "
        << v.amplitude_all_zeros.imag() << ")\n";
    out << "distribution:\n";
    for (const auto& [key, p] : v.query_register_distribution) {
        out << "  " << key << " " << p << "\n";
    }
    return out.str();
}

int run_dj_command(std::uint64_t seed, bool human, const std::string& bb_name,
                   const std::string& oracle_file, int n_check, bool want_mbqc,
                   bool want_circuit, bool refined) {
    if (want_mbqc && want_circuit) {
        throw std::invalid_argument("choose one of --mbqc and --circuit");
    }
    if (bb_name.empty() == oracle_file.empty()) {
        throw std::invalid_argument("give exactly one of --bb and --oracle-file");
    }
    if (refined && want_mbqc) {
        throw std::invalid_argument("--refined selects the circuit model");
    }
    std::mt19937_64 rng = mbqc::rng_stream(seed);
    json j;
    j["command"] = "dj";
    j["seed"] = seed;

    if (!oracle_file.empty()) {
        if (want_mbqc) {
            throw std::invalid_argument("file oracles run on the circuit model only");
        }
        const mbqc::OracleSpec oracle = mbqc::oracle_from_text(read_file(oracle_file));
        if (n_check > 0 && n_check != oracle.n) {
            throw std::invalid_argument("--n disagrees with the oracle file");
        }
        j["model"] = "circuit";
        j["refined"] = refined;
        j["oracle"] = json{{"n", oracle.n}, {"table", oracle.table}};
        const mbqc::DjVerdict v = mbqc::run_dj_circuit(oracle, refined, rng);
        j.update(verdict_json(v));
        emit(j, human, "model: circuit\n" + verdict_text(v));
        return 0;
    }

    const mbqc::BlackBoxId id = mbqc::black_box_from_string(bb_name);
    j["bb"] = mbqc::to_string(id);
    const bool use_circuit = want_circuit || refined;
    if (use_circuit) {
        j["model"] = "circuit";
        j["refined"] = refined;
        const mbqc::DjVerdict v = mbqc::run_dj_circuit(mbqc::bb_truth_table(id), refined, rng);
        j.update(verdict_json(v));
        emit(j, human, "model: circuit\nbb: " + bb_name + "\n" + verdict_text(v));
        return 0;
    }

    j["model"] = "mbqc";
    const auto [v, rec] = mbqc::run_dj_mbqc(id, rng);
    j.update(verdict_json(v));
    json outcomes = json::object();
    for (const auto& [vertex, bit] : rec.outcomes) outcomes[std::to_string(vertex)] = bit;
    j["branch"] = json{{"outcomes", outcomes}, {"probability", rec.probability}};
    std::ostringstream extra;
    extra << "model: mbqc\nbb: " << bb_name << "\n" << verdict_text(v) << "branch outcomes:";
    for (const auto& [vertex, bit] : rec.outcomes) extra << " s" << vertex << "=" << bit;
    extra << " (probability " << rec.probability << ")\n";
    emit(j, human, extra.str());
    return 0;
}

int run_bv_command(std::uint64_t seed, bool human, const std::string& s, bool want_mbqc,
                   bool want_circuit, bool refined) {
    if (want_mbqc && want_circuit) {
        throw std::invalid_argument("choose one of --mbqc and --circuit");
    }
    if (refined && want_mbqc) {
        throw std::invalid_argument("--refined selects the circuit model");
    }
    const bool use_mbqc = want_mbqc || (!want_circuit && !refined && s.size() == 2);
    if (use_mbqc && s.size() != 2) {
        throw std::invalid_argument("the cluster-state model serves two-bit s");
    }
    std::mt19937_64 rng = mbqc::rng_stream(seed);
    json j;
    j["command"] = "bv";
    j["seed"] = seed;
    j["model"] = use_mbqc ? "mbqc" : "circuit";
    if (!use_mbqc) j["refined"] = refined;
    j["s"] = s;
    mbqc::BvResult r;
    if (use_mbqc) {
        r = mbqc::run_bv_mbqc(s, rng).first;
    } else {
        r = mbqc::run_bv_circuit(s, refined, rng);
    }
    if (r.bb) j["bb"] = mbqc::to_string(*r.bb);
    j["recovered"] = r.recovered_s;
    j["probability"] = r.probability;
    j["match"] = r.recovered_s == s;
    std::ostringstream text;
    text << "model: " << (use_mbqc ? "mbqc" : "circuit") << "\ns: " << s;
    if (r.bb) text << "\nbb: " << mbqc::to_string(*r.bb);
    text << "\nrecovered: " << r.recovered_s << " (probability " << r.probability << ")\n";
    emit(j, human, text.str());
    return 0;
}

int run_pattern_command(bool human, const std::string& bb_name) {
    const mbqc::BlackBoxId id = mbqc::black_box_from_string(bb_name);
    const mbqc::MeasurementPattern p = mbqc::pattern_for_bb(id);
    json j;
    j["command"] = "pattern";
    j["bb"] = mbqc::to_string(id);
    json steps = json::array();
    for (const mbqc::MeasureStep& step : p.steps) {
        json s;
        s["vertex"] = step.label;
        if (step.basis.kind() == mbqc::MeasurementBasis::Kind::computational) {
            s["basis"] = "computational";
        } else {
            s["basis"] = "planar";
            s["angle"] = step.basis.alpha();
        }
        steps.push_back(s);
    }
    j["steps"] = steps;
    json ff = json::object();
    for (const auto& [vertex, spec] : p.feedforward) ff[std::to_string(vertex)] = spec.notation;
    j["feedforward"] = ff;
    j["text"] = mbqc::to_text(p);
    emit(j, human, mbqc::to_text(p));
    return 0;
}

int run_graph_command(bool human, int n) {
    const auto [g, layout] = mbqc::dj_bv_graph(n);
    json j;
    j["command"] = "graph";
    j["n"] = n;
    j["vertices"] = g.num_vertices;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    j["query_inputs"] = layout.query_inputs;
    j["ancilla_in"] = layout.ancilla_in;
    j["outputs"] = layout.outputs;
    j["oracle_qubits"] = layout.oracle_qubits;
    j["text"] = mbqc::to_text(g);
    emit(j, human, mbqc::to_text(g));
    return 0;
}

int run_photonic_command(std::uint64_t seed, bool human, std::uint64_t trials,
                         const std::string& network_file) {
    const mbqc::FusionNetwork net = network_file.empty()
                                        ? mbqc::default_chip_network()
                                        : mbqc::network_from_text(read_file(network_file));
    std::mt19937_64 rng = mbqc::rng_stream(seed);
    const mbqc::ChipRun run = mbqc::generate_chip_state(net, trials, rng);
    json j;
    j["command"] = "photonic";
    j["seed"] = seed;
    j["network"] = network_file.empty() ? "default" : network_file;
    j["trials"] = run.trials;
    j["successes"] = run.successes;
    j["empirical_probability"] = run.empirical_probability;
    j["analytic_probability"] = run.analytic_probability;
    if (run.target_fidelity) j["target_fidelity"] = *run.target_fidelity;
    if (run.conditional_state) {
        json amps = json::array();
        for (const mbqc::cdouble& a : run.conditional_state->amplitudes()) {
            amps.push_back(complex_json(a));
        }
        j["conditional_state"] = amps;
    }
    std::ostringstream text;
    text << "trials: " << run.trials << "\nsuccesses: " << run.successes
         << "\nempirical probability: " << run.empirical_probability
         << "\nanalytic probability: " << run.analytic_probability << "\n";
    if (run.target_fidelity) text << "target fidelity: " << *run.target_fidelity << "\n";
    emit(j, human, text.str());
    return 0;
}

int run_verify_command(std::uint64_t seed, bool human, const std::string& filter, bool timings,
                       double tol) {
    const mbqc::VerifyReport report = filter.empty() ? mbqc::verify_all(seed, tol)
                                                     : mbqc::verify_filtered(seed, filter, tol);
    if (report.checks.empty()) {
        std::cerr << "no checks match filter '" << filter << "'\n";
        return 2;
    }
    json j;
    j["command"] = "verify";
    j["seed"] = seed;
    j["tolerance"] = tol;
    json checks = json::array();
    for (const mbqc::CheckResult& c : report.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["residual"] = c.residual;
        if (timings) cj["seconds"] = c.seconds;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["all_pass"] = report.all_pass();
    emit(j, human, mbqc::to_text(report, timings));
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster-state Deutsch-Jozsa and Bernstein-Vazirani simulator"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool human = false;
    app.add_option("--seed", seed, "Master random seed")->envname("MBQC_SEED");
    app.add_flag("--human", human, "Plain-text output instead of JSON");

    auto* dj = app.add_subcommand("dj", "Decide constant vs balanced for an oracle");
    dj->fallthrough();
    std::string dj_bb, dj_file;
    int dj_n = 0;
    bool dj_mbqc = false, dj_circuit = false, dj_refined = false;
    dj->add_option("--bb", dj_bb, "Black box id (i..viii)");
    dj->add_option("--oracle-file", dj_file, "Oracle truth-table file");
    dj->add_option("--n", dj_n, "Expected input bit count of the file oracle");
    dj->add_flag("--mbqc", dj_mbqc, "Run the measurement-based model");
    dj->add_flag("--circuit", dj_circuit, "Run the circuit model");
    dj->add_flag("--refined", dj_refined, "Ancilla-free phase-oracle circuit");

    auto* bv = app.add_subcommand("bv", "Recover the hidden string of a dot-product oracle");
    bv->fallthrough();
    std::string bv_s;
    bool bv_mbqc = false, bv_circuit = false, bv_refined = false;
    bv->add_option("--s", bv_s, "Hidden binary string")->required();
    bv->add_flag("--mbqc", bv_mbqc, "Run the measurement-based model");
    bv->add_flag("--circuit", bv_circuit, "Run the circuit model");
    bv->add_flag("--refined", bv_refined, "Ancilla-free phase-oracle circuit");

    auto* pattern = app.add_subcommand("pattern", "Print a black box's measurement program");
    pattern->fallthrough();
    std::string pattern_bb;
    pattern->add_option("--bb", pattern_bb, "Black box id (i..viii)")->required();

    auto* graph = app.add_subcommand("graph", "Print the n-query resource graph");
    graph->fallthrough();
    int graph_n = 2;
    graph->add_option("--n", graph_n, "Number of query bits")->required();

    auto* photonic = app.add_subcommand("photonic", "Assemble the resource by fusions");
    photonic->fallthrough();
    std::uint64_t trials = 100000;
    std::string network_file;
    photonic->add_option("--trials", trials, "Sampled generation attempts");
    photonic->add_option("--network", network_file, "Fusion network file");

    auto* verify = app.add_subcommand("verify", "Cross-check the whole toolkit");
    verify->fallthrough();
    std::string filter;
    bool timings = false;
    double tol = mbqc::pipeline_tol;
    verify->add_option("--filter", filter, "Only run checks whose name contains this");
    verify->add_flag("--timings", timings, "Include wall times in the report");
    verify->add_option("--tol", tol, "Pass tolerance for residuals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(dj)) {
            return run_dj_command(seed, human, dj_bb, dj_file, dj_n, dj_mbqc, dj_circuit,
                                  dj_refined);
        }
        if (app.got_subcommand(bv)) {
            return run_bv_command(seed, human, bv_s, bv_mbqc, bv_circuit, bv_refined);
        }
        if (app.got_subcommand(pattern)) {
            return run_pattern_command(human, pattern_bb);
        }
        if (app.got_subcommand(graph)) {
            return run_graph_command(human, graph_n);
        }
        if (app.got_subcommand(photonic)) {
            return run_photonic_command(seed, human, trials, network_file);
        }
        if (app.got_subcommand(verify)) {
            return run_verify_command(seed, human, filter, timings, tol);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
