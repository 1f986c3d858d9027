#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbqc/state.hpp"

namespace mbqc {

// Undirected simple graph over vertices labeled 1..num_vertices. Edges
// are stored normalized (smaller label first) in sorted order, so two
// graphs compare equal iff they have the same vertex count and edge set.
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int a, int b);  // rejects loops, duplicates, bad labels
    bool has_edge(int a, int b) const;
    bool operator==(const Graph&) const = default;
};

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

// Vertex roles for a DJ/BV computation on a cluster. query_inputs[k] is
// the wire carrying query bit k+1; the first query bit lives on the
// highest-labeled branch (vertex 6 when n = 2), which is the wire
// assignment under which the per-box measurement programs reproduce the
// circuit model.
struct ResourceLayout {
    Graph graph;
    std::vector<int> query_inputs;
    int ancilla_in = 0;
    std::vector<int> outputs;        // unmeasured vertices, ascending
    std::vector<int> oracle_qubits;  // mediator vertices, ascending
};

// Prepares |+> on every vertex, then applies CZ on every edge.
StateVector cluster_from_graph(const Graph& g);

// The six-qubit resource built from its closed-form two-term expansion
// (not from a graph), normalized, together with the standard layout.
std::pair<StateVector, ResourceLayout> six_qubit_resource();

// sigma_z on vertex 4, encoding |-> on the ancilla wire. The register
// must hold exactly six qubits.
StateVector apply_y_encoding(const StateVector& resource);

// Generalized resource: ancilla-in vertex A joined to ancilla-out vertex
// B, plus n branches, each a query vertex Q_i tied to B through a
// mediator M_i. 2n+2 vertices total; n = 2 reproduces the six-qubit
// resource graph with identical labels.
std::pair<Graph, ResourceLayout> dj_bv_graph(int n);

// One match of the exhaustive edge-set search.
struct EdgeSearchMatch {
    Graph graph;
    // Vertices given a sigma_z before comparing; empty means the bare
    // cluster state already matches.
    std::vector<int> z_corrections;
};

// Searches all 2^15 edge sets on six vertices for cluster states whose
// fidelity to the target is at least 1 - tol (global phase ignored).
// When no bare edge set matches, the search widens to allow per-vertex
// sigma_z corrections and returns the corrected matches instead.
std::vector<EdgeSearchMatch> search_six_qubit_edge_sets(const StateVector& target,
                                                        double tol = algebraic_tol);

std::string to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

}  // namespace mbqc
