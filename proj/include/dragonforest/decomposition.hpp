#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dragonforest/multigraph.hpp"

namespace dragonforest {

constexpr int kRed = -1;

// One blue tree: parent links directed towards the root. Vertices outside the
// tree (only possible for non-spanning forests in degenerate shapes) keep -1
// parents and are tracked via `covers`.
struct OrientedTree {
    int root = -1;
    std::vector<int> parent_vertex;  // -1 at the root and at uncovered vertices
    std::vector<int> parent_edge;
    std::vector<char> covers;

    bool covered(int v) const { return covers.empty() ? true : covers[v] != 0; }
};

// k root-oriented spanning trees ("blue") plus an undirected forest ("red")
// partitioning E(G). color[e] is a tree index in 0..k-1, or kRed.
struct Decomposition {
    std::shared_ptr<const MultiGraph> graph;
    int k = 0;
    int root = 0;
    std::vector<OrientedTree> blue;
    std::vector<int> color;

    const MultiGraph& g() const { return *graph; }
    bool is_red(int e) const { return color[e] == kRed; }
};

struct RedComponent {
    std::vector<int> vertices;
    int edge_count = 0;
    int id = 0;  // smallest member vertex
};

// Partition of V into red components, ordered by smallest member vertex.
std::vector<RedComponent> red_components(const Decomposition& dec);
// vertex -> index into the red_components() list.
std::vector<int> red_component_labels(const Decomposition& dec);

// True iff b lies on the parent walk from a to the root; reflexive.
bool is_descendant(const OrientedTree& t, int a, int b);
// P^T(a,b): the parent walk from a to b. Requires a to be a descendant of b.
std::vector<int> tree_path(const OrientedTree& t, int a, int b);
// P_F(a,b): the unique red tree path. Requires a,b in one red component.
std::vector<int> red_path(const Decomposition& dec, int a, int b);

struct ValidationReport {
    bool ok = true;
    std::string violation;           // first violated invariant, empty when ok
    std::vector<int> witness_edges;  // e.g. the edges of a red cycle
};

// Checks every Decomposition invariant: colors partition E, each blue tree is
// spanning and oriented towards the common root, red is a forest.
ValidationReport validate(const Decomposition& dec);

}  // namespace dragonforest
