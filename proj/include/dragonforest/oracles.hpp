#pragma once

#include <optional>
#include <vector>

#include "dragonforest/decomposition.hpp"
#include "dragonforest/multigraph.hpp"
#include "dragonforest/rational.hpp"

namespace dragonforest {
namespace oracles {

// Independent brute-force ground truth, deliberately written against the
// public contracts only. Hard input-size guards throw std::invalid_argument.

// Exhaustive maximum of e(G[S])/(|S|-1) over all vertex subsets, n <= 16.
Rational brute_force_fractional_arboricity(const MultiGraph& g);

// Exhaustive search for a partition into k+1 forests where the last class has
// components of at most d edges. Guard: (k+1)^m <= 10^7. Returns the edge
// colors (0..k-1 forests, k = bounded class) of the first partition found in
// lexicographic color order, or nullopt.
std::optional<std::vector<int>> brute_force_sndt(const MultiGraph& g, int k, int d);

// Exhaustive maximum total size of k edge-disjoint forests, m <= 12.
int brute_force_forest_packing(const MultiGraph& g, int k);

// All legal orders of the exploration subgraph of dec (rooted at dec.root),
// as sequences of red-component ids; guard: at most 9 components involved.
std::vector<std::vector<int>> enumerate_legal_orders(const Decomposition& dec);

}  // namespace oracles
}  // namespace dragonforest
