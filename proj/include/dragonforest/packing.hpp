#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dragonforest/decomposition.hpp"
#include "dragonforest/multigraph.hpp"

namespace dragonforest {

// Builds a Decomposition from an edge coloring: parent arrays per blue class
// by BFS from the root. Classes that do not span leave vertices uncovered;
// validate() reports that.
Decomposition make_decomposition(std::shared_ptr<const MultiGraph> g, int k,
                                 std::vector<int> colors, int root);

struct ForestPacking {
    std::vector<std::vector<int>> forests;        // k edge-disjoint forests, maximum total size
    std::vector<int> leftover;                    // edges in no forest
    std::vector<std::vector<int>> min_partition;  // canonical vertex partition certifying optimality:
                                                  // total = sum_parts k(|P_i|-1) + #crossing edges
};

// Matroid-union packing of k graphic matroids by incremental insertion with
// BFS over the exchange digraph.
ForestPacking max_forest_packing(const MultiGraph& g, int k);

struct NashWilliamsResult {
    std::optional<std::vector<std::vector<int>>> forests;
    std::vector<int> witness;  // on failure: S with e(G[S]) > k(|S|-1)
};
NashWilliamsResult nash_williams_decompose(const MultiGraph& g, int k);

struct ShapeResult {
    enum class Status {
        Spanning,            // dec: k spanning trees + red forest
        AllBlueNonSpanning,  // forests: every edge packed blue, some tree short of rank n-1
        ReductionNeeded,     // tight_set: S with k disjoint spanning trees inside, S != V
        InsufficientForests, // witness: S with e(G[S]) > (k+1)(|S|-1)
        Disconnected,
    };
    Status status = Status::Disconnected;
    Decomposition dec;
    std::vector<std::vector<int>> forests;
    std::vector<int> tight_set;
    std::vector<int> witness;
};

// The engine's required shape: k spanning trees plus a forest, or the reason
// it cannot be built directly.
ShapeResult spanning_trees_plus_forest(const MultiGraph& g, int k, int root = 0);

}  // namespace dragonforest
