#include "mbqc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mbqc {

void Graph::add_edge(int a, int b) {
    if (a < 1 || a > num_vertices || b < 1 || b > num_vertices) {
        throw std::out_of_range("Graph: edge endpoint outside 1..num_vertices");
    }
    if (a == b) {
        throw std::invalid_argument("Graph: self-loops are not allowed");
    }
    const auto e = std::minmax(a, b);
    const std::pair<int, int> edge{e.first, e.second};
    const auto pos = std::lower_bound(edges.begin(), edges.end(), edge);
    if (pos != edges.end() && *pos == edge) {
        throw std::invalid_argument("Graph: duplicate edge");
    }
    edges.insert(pos, edge);
}

bool Graph::has_edge(int a, int b) const {
    const auto e = std::minmax(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair<int, int>{e.first, e.second});
}

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    if (num_vertices < 1) {
        throw std::invalid_argument("make_graph: need at least one vertex");
    }
    Graph g;
    g.num_vertices = num_vertices;
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

StateVector cluster_from_graph(const Graph& g) {
    StateVector st(g.num_vertices);  // the constructor enforces the cap
    for (int q = 0; q < g.num_vertices; ++q) st.apply(gates::h(), q);
    for (const auto& [a, b] : g.edges) st.apply_cz(a - 1, b - 1);
    return st;
}

namespace {

// Bit l of a 6-bit index, counting labels 1..6 from the most significant
// bit down.
int label_bit(std::uint64_t idx, int label) { return static_cast<int>((idx >> (6 - label)) & 1); }

double phi_pair(int a, int b, bool plus) {
    // (1/sqrt2)(|+>|0> pm |->|1>) expanded on basis bits (a, b).
    const double sign_a = a == 0 ? 1.0 : -1.0;
    const double val = b == 0 ? 1.0 : (plus ? sign_a : -sign_a);
    return 0.5 * val;
}

double middle_pair(int c, int d, bool plus) {
    // |0+> for the plus term, |1-> for the minus term, on bits (c, d).
    const double r = 1.0 / std::sqrt(2.0);
    if (plus) return c == 0 ? r : 0.0;
    return c == 1 ? (d == 0 ? r : -r) : 0.0;
}

}  // namespace

std::pair<StateVector, ResourceLayout> six_qubit_resource() {
    const double prefactor = 1.0 / (2.0 * std::sqrt(2.0));
    std::vector<cdouble> amp(64);
    for (std::uint64_t idx = 0; idx < 64; ++idx) {
        const int x1 = label_bit(idx, 1), x2 = label_bit(idx, 2), x3 = label_bit(idx, 3);
        const int x4 = label_bit(idx, 4), x5 = label_bit(idx, 5), x6 = label_bit(idx, 6);
        // The outer pair factors carry (vertex 1, vertex 2) on the left
        // half and (vertex 6, vertex 5) on the right half: the first
        // slot of the right pair is the higher label.
        const double plus_term =
            phi_pair(x1, x2, true) * middle_pair(x3, x4, true) * phi_pair(x6, x5, true);
        const double minus_term =
            phi_pair(x1, x2, false) * middle_pair(x3, x4, false) * phi_pair(x6, x5, false);
        amp[idx] = prefactor * (plus_term + minus_term);
    }
    return {StateVector::from_amplitudes(std::move(amp)), dj_bv_graph(2).second};
}

StateVector apply_y_encoding(const StateVector& resource) {
    if (resource.num_qubits() != 6) {
        throw std::invalid_argument("apply_y_encoding: expected a six-qubit register");
    }
    StateVector st = resource;
    st.apply(gates::z(), 3);
    return st;
}

std::pair<Graph, ResourceLayout> dj_bv_graph(int n) {
    if (n < 2) {
        throw std::invalid_argument("dj_bv_graph: defined for n >= 2");
    }
    const int vertices = 2 * n + 2;
    if (vertices > default_qubit_cap) {
        throw std::invalid_argument("dj_bv_graph: register exceeds the simulation cap");
    }
    // Fixed labels: ancilla-out B = 3, ancilla-in A = 4. Branch 1 uses
    // mediator 5 and query 6, branch 2 uses mediator 2 and query 1, and
    // branch i >= 3 uses the fresh pair (2i+1, 2i+2).
    Graph g;
    g.num_vertices = vertices;
    g.add_edge(3, 4);
    ResourceLayout layout;
    layout.ancilla_in = 4;
    std::vector<int> queries;
    std::vector<int> mediators;
    for (int i = 1; i <= n; ++i) {
        int m, q;
        if (i == 1) {
            m = 5;
            q = 6;
        } else if (i == 2) {
            m = 2;
            q = 1;
        } else {
            m = 2 * i + 1;
            q = 2 * i + 2;
        }
        g.add_edge(q, m);
        g.add_edge(m, 3);
        queries.push_back(q);
        mediators.push_back(m);
    }
    layout.graph = g;
    layout.query_inputs = queries;
    layout.oracle_qubits = mediators;
    std::sort(layout.oracle_qubits.begin(), layout.oracle_qubits.end());
    layout.outputs = queries;
    layout.outputs.push_back(3);
    std::sort(layout.outputs.begin(), layout.outputs.end());
    return {g, layout};
}

std::vector<EdgeSearchMatch> search_six_qubit_edge_sets(const StateVector& target, double tol) {
    if (target.num_qubits() != 6) {
        throw std::invalid_argument("search_six_qubit_edge_sets: target must have six qubits");
    }
    // Enumerate the 15 unordered pairs once; pair_word[p] holds, for each
    // basis index x, the product bit x_a & x_b, so the sign pattern of a
    // cluster state is the XOR of the words of its edges.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 6; ++a) {
        for (int b = a + 1; b <= 6; ++b) pairs.emplace_back(a, b);
    }
    std::vector<std::uint64_t> pair_word(pairs.size(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::uint64_t x = 0; x < 64; ++x) {
            if (label_bit(x, pairs[p].first) & label_bit(x, pairs[p].second)) {
                pair_word[p] |= 1ull << x;
            }
        }
    }
    const auto& t = target.amplitudes();
    const auto fidelity_of = [&](std::uint64_t sign_word) {
        cdouble ov(0.0, 0.0);
        for (std::uint64_t x = 0; x < 64; ++x) {
            const double c = (sign_word >> x) & 1 ? -0.125 : 0.125;
            ov += c * t[x];
        }
        return std::norm(ov);
    };
    const auto edges_of_mask = [&](std::uint32_t mask) {
        std::vector<std::pair<int, int>> e;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if ((mask >> p) & 1) e.push_back(pairs[p]);
        }
        return e;
    };

    std::vector<EdgeSearchMatch> exact;
    std::vector<std::uint64_t> base_word(1u << pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::uint64_t w = 0;
        if (mask != 0) {
            const std::uint32_t low = mask & (mask - 1);
            const int p = std::countr_zero(mask);
            w = base_word[low] ^ pair_word[p];
        }
        base_word[mask] = w;
        if (fidelity_of(w) >= 1.0 - tol) {
            exact.push_back({make_graph(6, edges_of_mask(mask)), {}});
        }
    }
    if (!exact.empty()) return exact;

    // Widened pass: allow sigma_z on any vertex subset before comparing.
    std::vector<EdgeSearchMatch> widened;
    for (std::uint32_t zset = 1; zset < 64; ++zset) {
        std::uint64_t zword = 0;
        for (std::uint64_t x = 0; x < 64; ++x) {
            if (std::popcount(x & static_cast<std::uint64_t>(zset)) & 1) zword |= 1ull << x;
        }
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            if (fidelity_of(base_word[mask] ^ zword) >= 1.0 - tol) {
                std::vector<int> corrections;
                for (int l = 1; l <= 6; ++l) {
                    if ((zset >> (6 - l)) & 1) corrections.push_back(l);
                }
                widened.push_back({make_graph(6, edges_of_mask(mask)), corrections});
            }
        }
    }
    return widened;
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.num_vertices << "\n";
    for (const auto& [a, b] : g.edges) out << "edge " << a << " " << b << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "graph") {
        throw std::invalid_argument("graph_from_text: expected leading 'graph <n>'");
    }
    int n = 0;
    if (!(in >> n)) {
        throw std::invalid_argument("graph_from_text: missing vertex count");
    }
    Graph g;
    g.num_vertices = n;
    if (n < 1) {
        throw std::invalid_argument("graph_from_text: need at least one vertex");
    }
    while (in >> tok) {
        if (tok != "edge") {
            throw std::invalid_argument("graph_from_text: unknown directive '" + tok + "'");
        }
        int a = 0, b = 0;
        if (!(in >> a >> b)) {
            throw std::invalid_argument("graph_from_text: malformed edge line");
        }
        g.add_edge(a, b);
    }
    return g;
}

}  // namespace mbqc
