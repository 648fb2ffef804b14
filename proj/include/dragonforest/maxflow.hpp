#pragma once

#include <vector>

namespace dragonforest {

// Small Dinic max-flow; capacities are integers (scaled rationals upstream).
class MaxFlow {
  public:
    explicit MaxFlow(int n) : head_(n, -1) {}

    // Returns the arc index of the forward arc.
    int add_arc(int from, int to, long long cap);
    void add_undirected(int u, int v, long long cap);

    long long run(int s, int t);

    // After run(): vertices reachable from s in the residual network
    // (the source side of a minimum cut).
    std::vector<int> min_cut_source_side(int s) const;

  private:
    struct Arc {
        int to;
        int next;
        long long cap;
    };
    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;

    bool bfs(int s, int t);
    long long dfs(int v, int t, long long limit);
};

}  // namespace dragonforest
