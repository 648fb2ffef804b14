#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dragonforest {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    int id = -1;
    int u = -1;
    int v = -1;
};

// Loopless multigraph. Vertices are 0..n-1; edge ids are dense 0..m-1 and are
// the unit of bookkeeping everywhere, since parallel edges are first-class.
struct MultiGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident;  // vertex -> incident edge ids

    // Validates endpoints and rejects loops.
    static MultiGraph make(int n, const std::vector<std::pair<int, int>>& ends);

    int m() const { return static_cast<int>(edges.size()); }

    int other_end(int edge_id, int v) const {
        const Edge& e = edges[edge_id];
        return e.u == v ? e.v : e.u;
    }
};

std::vector<int> component_labels(const MultiGraph& g);  // vertex -> component index (by smallest vertex order)
int component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Induced subgraph on a vertex set; keeps maps back to the host graph.
struct InducedSubgraph {
    MultiGraph g;
    std::vector<int> vertex_of;     // sub vertex -> host vertex
    std::vector<int> edge_of;       // sub edge id -> host edge id
    std::vector<int> vertex_to_sub; // host vertex -> sub vertex or -1
};
InducedSubgraph induce(const MultiGraph& g, const std::vector<int>& vertices);

// Contracts a vertex set to a single vertex, dropping the internal edges.
struct Contraction {
    MultiGraph g;
    std::vector<int> edge_of;      // quotient edge id -> host edge id
    std::vector<int> vertex_to_q;  // host vertex -> quotient vertex
    int merged_vertex = -1;
};
Contraction contract(const MultiGraph& g, const std::vector<int>& vertices);

// Graph text format: line "n m", then m lines "u v" (edge id = line index),
// then an optional section started by a line "rotations" with one line
// "v: e1 e2 ... ek" per vertex giving the clockwise cyclic order of incident
// edge ids.
struct ParsedGraph {
    MultiGraph g;
    std::optional<std::vector<std::vector<int>>> rotations;
};
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_string(const std::string& text);
std::string format_graph(const MultiGraph& g,
                         const std::vector<std::vector<int>>* rotations = nullptr);

}  // namespace dragonforest
