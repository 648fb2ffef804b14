#include "dragonforest/density.hpp"

#include <limits>
#include <stdexcept>

#include "dragonforest/maxflow.hpp"

namespace dragonforest {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// max over S (with forced in S when forced >= 0, over all S including the
// empty set otherwise) of q*e(G[S]) - p*|S|, and a maximizing S.
// Standard selection network: source -> edge node (cap q), edge node -> its
// endpoints (cap inf), vertex -> sink (cap p).
std::pair<long long, std::vector<int>> best_excess(const MultiGraph& g, long long p,
                                                   long long q, int forced) {
    int m = g.m(), n = g.n;
    int source = 0, sink = 1 + m + n;
    MaxFlow flow(m + n + 2);
    for (int e = 0; e < m; ++e) {
        flow.add_arc(source, 1 + e, q);
        flow.add_arc(1 + e, 1 + m + g.edges[e].u, kInf);
        flow.add_arc(1 + e, 1 + m + g.edges[e].v, kInf);
    }
    for (int v = 0; v < n; ++v) flow.add_arc(1 + m + v, sink, p);
    if (forced >= 0) flow.add_arc(source, 1 + m + forced, kInf);
    long long cut = flow.run(source, sink);
    long long best = static_cast<long long>(q) * m - cut;
    std::vector<int> chosen;
    for (int node : flow.min_cut_source_side(source))
        if (node >= 1 + m && node < sink) chosen.push_back(node - 1 - m);
    return {best, chosen};
}

// Is gamma(g) > p/q?  Equivalent to some S with |S| >= 2 and
// q*e(S) - p*|S| > -p (singletons sit exactly at -p).
bool exceeds(const MultiGraph& g, long long p, long long q, std::vector<int>* witness) {
    auto [unforced, set0] = best_excess(g, p, q, -1);
    if (unforced > 0) {
        if (witness) *witness = set0;
        return true;
    }
    for (int v = 0; v < g.n; ++v) {
        auto [val, set] = best_excess(g, p, q, v);
        if (val > -p) {
            if (witness) *witness = set;
            return true;
        }
    }
    return false;
}

}  // namespace

Rational fractional_arboricity(const MultiGraph& g) {
    if (g.m() == 0) return Rational(0);
    long long max_den = g.n - 1;
    // Stern-Brocot walk between lo and hi (hi starts at the formal 1/0).
    // Mediant descent keeps |lo x hi| = 1, so once lo.den + hi.den exceeds
    // n-1 the only candidate left with denominator <= n-1 is hi itself.
    long long lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 0;
    while (hi_d == 0 || lo_d + hi_d <= max_den) {
        long long med_n = lo_n + hi_n, med_d = lo_d + hi_d;
        if (exceeds(g, med_n, med_d, nullptr)) {
            lo_n = med_n;
            lo_d = med_d;
        } else {
            hi_n = med_n;
            hi_d = med_d;
        }
    }
    if (hi_d > max_den) throw std::logic_error("fractional_arboricity: search failed");
    return Rational(hi_n, hi_d);
}

int arboricity(const MultiGraph& g) {
    Rational gamma = fractional_arboricity(g);
    return static_cast<int>((gamma.num + gamma.den - 1) / gamma.den);
}

std::optional<std::vector<int>> densest_subgraph_witness(const MultiGraph& g,
                                                         const Rational& threshold) {
    if (threshold.num <= 0) throw std::invalid_argument("densest_subgraph_witness: threshold must be positive");
    std::vector<int> witness;
    if (exceeds(g, threshold.num, threshold.den, &witness)) return witness;
    return std::nullopt;
}

Rational chi(int k, int d) {
    if (k < 1 || d < 1 || d >= 3 * (k + 1))
        throw std::domain_error("chi: parameters out of range");
    if (d <= k + 1) return Rational(d, d + k + 1);
    return Rational(d + k, d + 3 * k + 1);
}

int component_bound(int k, int d) {
    if (k < 1 || d < 1 || d > 2 * (k + 1))
        throw std::domain_error("component_bound: parameters out of range");
    if (d <= k + 1) return d;
    long long ceil_part = (static_cast<long long>(k) * d + k) / (k + 1);
    return d + static_cast<int>(ceil_part) - k;
}

bool is_small(int edge_count, int k, int d) {
    if (d <= k + 1) return edge_count == 0;
    return edge_count <= 1;
}

}  // namespace dragonforest
