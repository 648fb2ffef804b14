#include "dragonforest/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <stdexcept>

namespace dragonforest {
namespace oracles {

namespace {

// Union-find with rollback for the exhaustive searches.
struct RollbackDsu {
    std::vector<int> parent, size, edges;
    struct Change {
        int child, root, old_edges;
    };
    std::vector<Change> log;

    explicit RollbackDsu(int n) : parent(n), size(n, 1), edges(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
    // Returns false on a cycle (roots equal); otherwise unions and logs.
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size[ra] < size[rb]) std::swap(ra, rb);
        log.push_back({rb, ra, edges[ra]});
        parent[rb] = ra;
        size[ra] += size[rb];
        edges[ra] += edges[rb] + 1;
        return true;
    }
    void rollback() {
        Change c = log.back();
        log.pop_back();
        size[c.root] -= size[c.child];
        edges[c.root] = c.old_edges;
        parent[c.child] = c.child;
    }
};

}  // namespace

Rational brute_force_fractional_arboricity(const MultiGraph& g) {
    if (g.n > 16) throw std::invalid_argument("brute_force_fractional_arboricity: n > 16");
    if (g.m() == 0) return Rational(0);
    std::vector<unsigned> edge_mask(g.m());
    for (const Edge& e : g.edges) edge_mask[e.id] = (1u << e.u) | (1u << e.v);
    Rational best(0);
    for (unsigned s = 0; s < (1u << g.n); ++s) {
        int size = __builtin_popcount(s);
        if (size < 2) continue;
        long long inside = 0;
        for (int e = 0; e < g.m(); ++e)
            if ((edge_mask[e] & s) == edge_mask[e]) ++inside;
        Rational density(inside, size - 1);
        if (best < density) best = density;
    }
    return best;
}

std::optional<std::vector<int>> brute_force_sndt(const MultiGraph& g, int k, int d) {
    if (k < 1 || d < 0) throw std::invalid_argument("brute_force_sndt: bad parameters");
    double combos = std::pow(static_cast<double>(k + 1), g.m());
    if (combos > 1e7) throw std::invalid_argument("brute_force_sndt: search space too large");

    std::vector<RollbackDsu> forest;
    for (int c = 0; c <= k; ++c) forest.emplace_back(g.n);
    std::vector<int> colors(g.m(), -1);

    std::function<bool(int)> go = [&](int e) -> bool {
        if (e == g.m()) return true;
        int u = g.edges[e].u, v = g.edges[e].v;
        for (int c = 0; c <= k; ++c) {
            RollbackDsu& dsu = forest[c];
            int ru = dsu.find(u), rv = dsu.find(v);
            if (ru == rv) continue;  // cycle in class c
            if (c == k && dsu.edges[ru] + dsu.edges[rv] + 1 > d) continue;
            dsu.unite(u, v);
            colors[e] = c;
            if (go(e + 1)) return true;
            dsu.rollback();
            colors[e] = -1;
        }
        return false;
    };
    if (go(0)) return colors;
    return std::nullopt;
}

int brute_force_forest_packing(const MultiGraph& g, int k) {
    if (g.m() > 12) throw std::invalid_argument("brute_force_forest_packing: m > 12");
    std::vector<RollbackDsu> forest;
    for (int c = 0; c < k; ++c) forest.emplace_back(g.n);
    int best = 0;
    std::function<void(int, int)> go = [&](int e, int placed) {
        if (placed + (g.m() - e) <= best) return;
        if (e == g.m()) {
            best = std::max(best, placed);
            return;
        }
        int u = g.edges[e].u, v = g.edges[e].v;
        for (int c = 0; c < k; ++c) {
            if (forest[c].find(u) == forest[c].find(v)) continue;
            forest[c].unite(u, v);
            go(e + 1, placed + 1);
            forest[c].rollback();
        }
        go(e + 1, placed);  // leave the edge out
    };
    go(0, 0);
    return best;
}

std::vector<std::vector<int>> enumerate_legal_orders(const Decomposition& dec) {
    const MultiGraph& g = dec.g();

    // Independent red-component labelling.
    std::vector<int> comp(g.n, -1);
    std::vector<int> comp_id;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        int c = static_cast<int>(comp_id.size());
        comp_id.push_back(s);
        comp[s] = c;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e : g.incident[v])
                if (dec.is_red(e)) {
                    int w = g.other_end(e, v);
                    if (comp[w] == -1) {
                        comp[w] = c;
                        queue.push_back(w);
                    }
                }
        }
    }

    // Independent exploration closure: red adjacency plus blue parent steps.
    std::vector<char> in_h(g.n, 0);
    in_h[dec.root] = 1;
    std::deque<int> queue{dec.root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : g.incident[v])
            if (dec.is_red(e)) {
                int w = g.other_end(e, v);
                if (!in_h[w]) {
                    in_h[w] = 1;
                    queue.push_back(w);
                }
            }
        for (const OrientedTree& t : dec.blue) {
            int p = t.parent_vertex[v];
            if (p != -1 && !in_h[p]) {
                in_h[p] = 1;
                queue.push_back(p);
            }
        }
    }

    std::vector<int> comps_in_h;
    for (int c = 0; c < static_cast<int>(comp_id.size()); ++c)
        if (in_h[comp_id[c]]) comps_in_h.push_back(c);
    if (comps_in_h.size() > 9)
        throw std::invalid_argument("enumerate_legal_orders: more than 9 components");

    // comp -> comp arcs induced by blue parent edges inside the closure.
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < g.n; ++v) {
        if (!in_h[v]) continue;
        for (const OrientedTree& t : dec.blue) {
            int p = t.parent_vertex[v];
            if (p != -1 && in_h[p] && comp[v] != comp[p]) arcs.emplace_back(comp[v], comp[p]);
        }
    }

    std::vector<std::vector<int>> orders;
    std::vector<int> seq;
    std::vector<char> placed(comp_id.size(), 0);
    std::function<void()> extend = [&]() {
        if (seq.size() == comps_in_h.size()) {
            std::vector<int> ids;
            for (int c : seq) ids.push_back(comp_id[c]);
            orders.push_back(ids);
            return;
        }
        for (int c : comps_in_h) {
            if (placed[c]) continue;
            bool reachable = false;
            for (auto [from, to] : arcs)
                if (to == c && placed[from]) reachable = true;
            if (!reachable) continue;
            placed[c] = 1;
            seq.push_back(c);
            extend();
            seq.pop_back();
            placed[c] = 0;
        }
    };
    int root_comp = comp[dec.root];
    placed[root_comp] = 1;
    seq.push_back(root_comp);
    extend();
    return orders;
}

}  // namespace oracles
}  // namespace dragonforest
