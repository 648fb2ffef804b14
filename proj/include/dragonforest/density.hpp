#pragma once

#include <optional>
#include <vector>

#include "dragonforest/multigraph.hpp"
#include "dragonforest/rational.hpp"

namespace dragonforest {

// gamma(G): maximum of e(H)/(v(H)-1) over induced subgraphs H with >= 2
// vertices; 0 for edgeless graphs. Exact. The search walks Stern-Brocot
// mediants bounded by denominator n-1, each step decided by min-cuts.
Rational fractional_arboricity(const MultiGraph& g);

// ceil(gamma): the arboricity by Nash-Williams.
int arboricity(const MultiGraph& g);

// Some S with e(G[S]) > threshold*(|S|-1), or nullopt if none exists.
// Decided exactly by maximizing e(H) - t*v(H) via min-cut.
std::optional<std::vector<int>> densest_subgraph_witness(const MultiGraph& g,
                                                         const Rational& threshold);

// The density threshold of the decomposition theorem:
// d/(d+k+1) for d <= k+1, (d+k)/(d+3k+1) for k+1 < d < 3(k+1).
Rational chi(int k, int d);

// Component bound the user-facing theorem guarantees:
// d for d <= k+1, d + ceil(k*d/(k+1)) - k for k+1 < d <= 2(k+1).
int component_bound(int k, int d);

// A red component with this many edges is small: 0 edges when d <= k+1,
// at most 1 edge when k+1 < d < 3(k+1).
bool is_small(int edge_count, int k, int d);

}  // namespace dragonforest
