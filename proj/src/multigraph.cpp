#include "dragonforest/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>

namespace dragonforest {

MultiGraph MultiGraph::make(int n, const std::vector<std::pair<int, int>>& ends) {
    if (n < 0) throw std::invalid_argument("MultiGraph: negative vertex count");
    MultiGraph g;
    g.n = n;
    g.incident.assign(n, {});
    g.edges.reserve(ends.size());
    for (size_t i = 0; i < ends.size(); ++i) {
        auto [u, v] = ends[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("MultiGraph: endpoint out of range");
        if (u == v) throw std::invalid_argument("MultiGraph: loops are not allowed");
        int id = static_cast<int>(i);
        g.edges.push_back({id, u, v});
        g.incident[u].push_back(id);
        g.incident[v].push_back(id);
    }
    return g;
}

std::vector<int> component_labels(const MultiGraph& g) {
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

int component_count(const MultiGraph& g) {
    auto label = component_labels(g);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

InducedSubgraph induce(const MultiGraph& g, const std::vector<int>& vertices) {
    InducedSubgraph sub;
    sub.vertex_to_sub.assign(g.n, -1);
    sub.vertex_of = vertices;
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n || sub.vertex_to_sub[v] != -1)
            throw std::invalid_argument("induce: bad vertex set");
        sub.vertex_to_sub[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : g.edges) {
        int su = sub.vertex_to_sub[e.u];
        int sv = sub.vertex_to_sub[e.v];
        if (su != -1 && sv != -1) {
            ends.emplace_back(su, sv);
            sub.edge_of.push_back(e.id);
        }
    }
    sub.g = MultiGraph::make(static_cast<int>(vertices.size()), ends);
    return sub;
}

Contraction contract(const MultiGraph& g, const std::vector<int>& vertices) {
    std::vector<char> in_set(g.n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.n || in_set[v])
            throw std::invalid_argument("contract: bad vertex set");
        in_set[v] = 1;
    }
    Contraction q;
    q.vertex_to_q.assign(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (!in_set[v]) q.vertex_to_q[v] = next++;
    q.merged_vertex = next;
    for (int v = 0; v < g.n; ++v)
        if (in_set[v]) q.vertex_to_q[v] = q.merged_vertex;
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : g.edges) {
        if (in_set[e.u] && in_set[e.v]) continue;  // internal, dropped
        ends.emplace_back(q.vertex_to_q[e.u], q.vertex_to_q[e.v]);
        q.edge_of.push_back(e.id);
    }
    q.g = MultiGraph::make(next + 1, ends);
    return q;
}

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            // allow blank lines between sections
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError("empty graph file");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad header line, expected \"n m\"");

    std::vector<std::pair<int, int>> ends;
    ends.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_line(edge_line)) throw ParseError("unexpected end of file in edge list");
        std::istringstream es(edge_line);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError("bad edge line: " + edge_line);
        ends.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    ParsedGraph parsed;
    try {
        parsed.g = MultiGraph::make(static_cast<int>(n), ends);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    std::string section;
    if (!next_line(section)) return parsed;
    if (section.find("rotations") == std::string::npos)
        throw ParseError("unexpected trailing content: " + section);

    std::vector<std::vector<int>> rot(parsed.g.n);
    std::vector<char> seen(parsed.g.n, 0);
    for (int i = 0; i < parsed.g.n; ++i) {
        std::string rline;
        if (!next_line(rline)) throw ParseError("rotations: missing line for some vertex");
        auto colon = rline.find(':');
        if (colon == std::string::npos) throw ParseError("rotations: missing ':' in " + rline);
        int v;
        {
            std::istringstream vs(rline.substr(0, colon));
            if (!(vs >> v) || v < 0 || v >= parsed.g.n)
                throw ParseError("rotations: bad vertex in " + rline);
        }
        if (seen[v]) throw ParseError("rotations: duplicate vertex line");
        seen[v] = 1;
        std::istringstream es(rline.substr(colon + 1));
        int e;
        while (es >> e) {
            if (e < 0 || e >= parsed.g.m()) throw ParseError("rotations: edge id out of range");
            rot[v].push_back(e);
        }
    }
    parsed.rotations = std::move(rot);
    return parsed;
}

ParsedGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const MultiGraph& g, const std::vector<std::vector<int>>* rotations) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges) out << e.u << ' ' << e.v << '\n';
    if (rotations) {
        out << "rotations\n";
        for (int v = 0; v < g.n; ++v) {
            out << v << ':';
            for (int e : (*rotations)[v]) out << ' ' << e;
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace dragonforest
