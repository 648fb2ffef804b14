#include "dragonforest/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dragonforest {

int MaxFlow::add_arc(int from, int to, long long cap) {
    int idx = static_cast<int>(arcs_.size());
    arcs_.push_back({to, head_[from], cap});
    head_[from] = idx;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = idx + 1;
    return idx;
}

void MaxFlow::add_undirected(int u, int v, long long cap) {
    int idx = static_cast<int>(arcs_.size());
    arcs_.push_back({v, head_[u], cap});
    head_[u] = idx;
    arcs_.push_back({u, head_[v], cap});
    head_[v] = idx + 1;
}

bool MaxFlow::bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    level_[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
            if (arcs_[a].cap > 0 && level_[arcs_[a].to] == -1) {
                level_[arcs_[a].to] = level_[v] + 1;
                queue.push_back(arcs_[a].to);
            }
        }
    }
    return level_[t] != -1;
}

long long MaxFlow::dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
        Arc& arc = arcs_[a];
        if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
        long long pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
            arc.cap -= pushed;
            arcs_[a ^ 1].cap += pushed;
            return pushed;
        }
    }
    return 0;
}

long long MaxFlow::run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
        iter_ = head_;
        while (long long pushed = dfs(s, t, std::numeric_limits<long long>::max()))
            flow += pushed;
    }
    return flow;
}

std::vector<int> MaxFlow::min_cut_source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int a = head_[v]; a != -1; a = arcs_[a].next)
            if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                seen[arcs_[a].to] = 1;
                queue.push_back(arcs_[a].to);
            }
    }
    std::vector<int> side;
    for (size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) side.push_back(static_cast<int>(v));
    return side;
}

}  // namespace dragonforest
