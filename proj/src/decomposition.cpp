#include "dragonforest/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dragonforest {

std::vector<int> red_component_labels(const Decomposition& dec) {
    const MultiGraph& g = dec.g();
    std::vector<int> label(g.n, -1);
    int next = 0;
    std::deque<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e : g.incident[v]) {
                if (!dec.is_red(e)) continue;
                int w = g.other_end(e, v);
                if (label[w] == -1) {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<RedComponent> red_components(const Decomposition& dec) {
    const MultiGraph& g = dec.g();
    auto label = red_component_labels(dec);
    int count = g.n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<RedComponent> comps(count);
    for (int v = 0; v < g.n; ++v) comps[label[v]].vertices.push_back(v);
    for (const Edge& e : g.edges)
        if (dec.is_red(e.id)) ++comps[label[e.u]].edge_count;
    for (RedComponent& c : comps) c.id = c.vertices.front();
    return comps;
}

bool is_descendant(const OrientedTree& t, int a, int b) {
    if (!t.covered(a) || !t.covered(b))
        throw std::invalid_argument("is_descendant: vertex not covered by tree");
    int v = a;
    while (true) {
        if (v == b) return true;
        if (v == t.root) return false;
        v = t.parent_vertex[v];
    }
}

std::vector<int> tree_path(const OrientedTree& t, int a, int b) {
    if (!t.covered(a) || !t.covered(b))
        throw std::invalid_argument("tree_path: vertex not covered by tree");
    std::vector<int> path;
    int v = a;
    while (true) {
        path.push_back(v);
        if (v == b) return path;
        if (v == t.root) throw std::invalid_argument("tree_path: a is not a descendant of b");
        v = t.parent_vertex[v];
    }
}

std::vector<int> red_path(const Decomposition& dec, int a, int b) {
    const MultiGraph& g = dec.g();
    std::vector<int> prev(g.n, -2);
    prev[a] = -1;
    std::deque<int> queue{a};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (int e : g.incident[v]) {
            if (!dec.is_red(e)) continue;
            int w = g.other_end(e, v);
            if (prev[w] == -2) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (prev[b] == -2) throw std::invalid_argument("red_path: vertices in different red components");
    std::vector<int> path;
    for (int v = b; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

ValidationReport fail(const std::string& what, std::vector<int> witness = {}) {
    return ValidationReport{false, what, std::move(witness)};
}

}  // namespace

ValidationReport validate(const Decomposition& dec) {
    const MultiGraph& g = dec.g();
    if (!dec.graph) return fail("no graph attached");
    if (static_cast<int>(dec.color.size()) != g.m()) return fail("color vector size mismatch");
    if (static_cast<int>(dec.blue.size()) != dec.k) return fail("blue tree count mismatch");
    for (int e = 0; e < g.m(); ++e)
        if (dec.color[e] != kRed && (dec.color[e] < 0 || dec.color[e] >= dec.k))
            return fail("edge color out of range", {e});

    for (int t = 0; t < dec.k; ++t) {
        const OrientedTree& tree = dec.blue[t];
        if (tree.root != dec.root) return fail("blue tree root differs from decomposition root");
        if (static_cast<int>(tree.parent_vertex.size()) != g.n ||
            static_cast<int>(tree.parent_edge.size()) != g.n)
            return fail("blue tree parent arrays sized wrong");
        int tree_edges = 0;
        for (int v = 0; v < g.n; ++v) {
            if (v == tree.root) {
                if (tree.parent_vertex[v] != -1) return fail("root has a parent entry");
                continue;
            }
            int p = tree.parent_vertex[v];
            int pe = tree.parent_edge[v];
            if (p == -1 || pe == -1) return fail("blue tree not spanning: vertex has no parent");
            if (pe < 0 || pe >= g.m()) return fail("parent edge id out of range");
            const Edge& e = g.edges[pe];
            if (!((e.u == v && e.v == p) || (e.v == v && e.u == p)))
                return fail("parent edge does not connect vertex to parent", {pe});
            if (dec.color[pe] != t) return fail("not a partition", {pe});
            ++tree_edges;
        }
        int colored = 0;
        for (int e = 0; e < g.m(); ++e)
            if (dec.color[e] == t) ++colored;
        if (colored != tree_edges) return fail("not a partition: tree color count mismatch");
        // orientation: every parent walk must terminate at the root
        std::vector<int> state(g.n, 0);  // 0 unknown, 1 on stack, 2 reaches root
        for (int v = 0; v < g.n; ++v) {
            int w = v;
            std::vector<int> stack;
            while (w != tree.root && state[w] == 0) {
                state[w] = 1;
                stack.push_back(w);
                w = tree.parent_vertex[w];
                if (w == -1 || state[w] == 1) return fail("blue orientation does not reach root");
            }
            for (int s : stack) state[s] = 2;
        }
    }

    // red forest check with a union-find; on failure report the cycle
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::vector<std::pair<int, int>>> red_adj(g.n);  // (neighbor, edge)
    for (const Edge& e : g.edges) {
        if (!dec.is_red(e.id)) continue;
        int ru = find(e.u), rv = find(e.v);
        if (ru == rv) {
            // reconstruct the cycle among red edges added so far
            std::vector<int> prev_v(g.n, -2), prev_e(g.n, -1);
            prev_v[e.u] = -1;
            std::deque<int> queue{e.u};
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (auto [w, id] : red_adj[v])
                    if (prev_v[w] == -2) {
                        prev_v[w] = v;
                        prev_e[w] = id;
                        queue.push_back(w);
                    }
            }
            std::vector<int> cycle{e.id};
            for (int v = e.v; prev_v[v] != -1; v = prev_v[v]) cycle.push_back(prev_e[v]);
            return fail("red not a forest", cycle);
        }
        parent[ru] = rv;
        red_adj[e.u].emplace_back(e.v, e.id);
        red_adj[e.v].emplace_back(e.u, e.id);
    }
    return ValidationReport{};
}

}  // namespace dragonforest
